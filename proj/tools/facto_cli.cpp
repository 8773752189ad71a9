// Command-line front end.  All mathematics goes through the C API; this
// file only parses flags, renders reports, and maps statuses to exit
// codes (0 ok, 2 input error, 3 budget/diagnostic, 4 construction
// failure) -- verdicts are data, never exit codes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "facto.h"

namespace {

using nlohmann::json;

struct CtxDeleter {
  void operator()(facto_ctx* c) const { facto_ctx_free(c); }
};
struct PolyDeleter {
  void operator()(facto_poly* p) const { facto_poly_free(p); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { facto_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

int exit_code_for(facto_status st) {
  switch (st) {
    case FACTO_OK:
      return 0;
    case FACTO_ERR_INVALID:
    case FACTO_ERR_PARSE:
      return 2;
    case FACTO_ERR_BUDGET:
    case FACTO_ERR_BADPRIME:
    case FACTO_ERR_DEGENERATE:
      return 3;
    case FACTO_ERR_CONSTRUCT:
      return 4;
    default:
      return 1;
  }
}

int fail(const facto_ctx* ctx, facto_status st) {
  std::cerr << "error: " << facto_last_error(ctx) << "\n";
  return exit_code_for(st);
}

std::vector<long long> parse_csv_longs(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoll(tok));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- text renderers (the JSON is the source of truth in both modes) ----

void render_check(const json& j, std::ostream& os) {
  const auto& prof = j["profile"];
  os << "profile: degree " << prof["d"] << " hypersurface in P^" << prof["n"].get<int>()
     << ", k = " << prof["k"] << ", multiplicities " << prof["mults"].dump() << ", position "
     << prof["position"].get<std::string>() << "\n";
  os << "criteria:\n";
  for (const auto& c : j["criteria"]) {
    std::string mark = !c["applicable"].get<bool>() ? "n/a  "
                       : c["value"].get<bool>()     ? "true "
                                                    : "false";
    os << "  [" << mark << "] " << c["name"].get<std::string>() << ": "
       << c["hypothesis_text"].get<std::string>() << "\n";
  }
  os << "verdict: " << j["verdict"].get<std::string>();
  if (j.contains("reason")) os << " (" << j["reason"].get<std::string>() << ")";
  os << "\n";
  if (j.contains("witness")) os << "witness: " << j["witness"].get<std::string>() << "\n";
}

void render_analyze(const json& j, std::ostream& os) {
  os << "singular points over F_" << j["prime"] << " (e_max " << j["e_max"]
     << "): " << j["singular_count"] << "\n";
  for (const auto& p : j["points"]) {
    os << "  point [";
    bool first = true;
    for (const auto& c : p["point"]) {
      if (!first) os << " : ";
      os << c.get<std::string>();
      first = false;
    }
    os << "]  multiplicity " << p["multiplicity"] << ", "
       << (p["ordinary"].get<bool>() ? "ordinary" : "NOT ordinary") << " ("
       << p["certificate_kind"].get<std::string>() << ")";
    if (!p["milnor"].is_null())
      os << ", milnor " << p["milnor"];
    else
      os << ", milnor infinite (non-isolated)";
    if (p.contains("expected_milnor")) os << " [expected " << p["expected_milnor"] << "]";
    os << "\n    tangent cone: " << p["tangent_cone"].get<std::string>() << "\n";
  }
  const auto& tp = j["two_prime"];
  if (tp["checked"].get<bool>())
    os << "two-prime check: agreement with F_" << tp["second_prime"] << "\n";
  os << "scope: " << j["certified_scope"].get<std::string>() << "\n";
}

void render_defect(const json& j, std::ostream& os) {
  os << "k = " << j["k"] << " nodes, forms of degree " << j["degree_checked"] << " ("
     << j["monomial_count"] << " monomials)\n";
  os << "rank " << j["rank"] << "  =>  defect " << j["defect"] << ", b4 = " << j["b4"] << "\n";
  os << (j["defect"].get<long long>() == 0 ? "zero defect: factorial for a nodal hypersurface\n"
                                           : "positive defect: not factorial for a nodal "
                                             "hypersurface\n");
}

void render_construct(const json& j, std::ostream& os) {
  os << "family " << j["family"].get<std::string>() << ", degree " << j["degree"] << ", seed "
     << j["seed"] << ", retries " << j["retries"] << "\n";
  const auto& e = j["expected"];
  os << "singular points: " << e["count"] << " of multiplicity " << e["multiplicity"] << ", "
     << (e["ordinary"].get<bool>() ? "ordinary" : "non-ordinary") << "\n";
  if (!j["witness_plane"].is_null())
    os << "contains the plane " << j["witness_plane"].get<std::string>() << "\n";
  if (j.contains("factorial_iff_pic_Z"))
    os << "factorial iff Pic V = Z (asserted: " << j["factorial_iff_pic_Z"].dump() << ")\n";
}

void render_intersect(const json& j, std::ostream& os) {
  os << "(" << j["a"] << "H - sum E)^" << j["n"] << " with b = " << j["bs"].dump() << " = "
     << j["intersection_number"] << (j["positive"].get<bool>() ? " (positive)" : "") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"facto: factoriality toolkit for threefold hypersurfaces with ordinary "
               "multiple points"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "text";
  long long prime = 101, prime2 = 211, emax = 2, seed = 0;
  long long groebner_budget = 1'000'000, enum_budget = 1'000'000, retries = 32;
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--prime", prime, "working prime for analysis (default 101)");
  app.add_option("--prime2", prime2, "second prime for the agreement check (0 disables)");
  app.add_option("--emax", emax, "largest extension degree searched (default 2)");
  app.add_option("--seed", seed, "seed for randomized constructions");
  app.add_option("--groebner-budget", groebner_budget, "Groebner reduction step budget");
  app.add_option("--enum-budget", enum_budget, "point enumeration budget");
  app.add_option("--retries", retries, "construction retry budget");

  // check
  auto* check = app.add_subcommand("check", "evaluate the factoriality criteria table");
  long long check_d = 0;
  std::string check_mults, check_position = "unknown";
  int check_n = 4;
  check->add_option("--d", check_d, "hypersurface degree")->required();
  check->add_option("--mults", check_mults, "comma-separated multiplicities (empty = smooth)");
  check->add_option("--position", check_position, "general | plane | unknown");
  check->add_option("--n", check_n, "ambient projective dimension (default 4)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "find and classify the singular points");
  std::string analyze_file;
  analyze->add_option("file", analyze_file, ".poly file")->required();

  // construct
  auto* construct = app.add_subcommand("construct", "build a verified singular hypersurface");
  std::string family, out_prefix, cone_g = "fermat4";
  long long c_d = 4, c_m = 2, c_t = 1, c_delta = 2;
  bool pic_z = true;
  construct->add_option("family", family, "example52 | prop61 | kollar | cone")->required();
  construct->add_option("--d", c_d, "degree (example52)");
  construct->add_option("--m", c_m, "multiplicity (example52)");
  construct->add_option("--t", c_t, "pencil exponent (prop61)");
  construct->add_option("--delta", c_delta, "pencil degree (prop61)");
  construct->add_option("--g", cone_g, "cone base surface: fermat<d> or a .poly file");
  construct->add_flag("--picz,!--no-picz", pic_z, "assert Pic V = Z for the cone base");
  construct->add_option("--out", out_prefix, "output prefix (writes <out>.poly and <out>.json)");

  // defect
  auto* defect = app.add_subcommand("defect", "interpolation defect of a node configuration");
  std::string defect_file;
  long long defect_d = 0;
  defect->add_option("file", defect_file, "points file")->required();
  defect->add_option("--d", defect_d, "hypersurface degree")->required();

  // intersect
  auto* intersect = app.add_subcommand("intersect", "intersection number on a point blow-up");
  long long i_a = 0;
  std::string i_bs;
  int i_n = 4;
  intersect->add_option("--a", i_a, "H coefficient")->required();
  intersect->add_option("--bs", i_bs, "comma-separated exceptional coefficients");
  intersect->add_option("--n", i_n, "ambient dimension (default 4)");

  CLI11_PARSE(app, argc, argv);

  std::unique_ptr<facto_ctx, CtxDeleter> ctx(facto_ctx_new());
  if (!ctx) {
    std::cerr << "error: failed to initialize\n";
    return 1;
  }
  struct Opt {
    const char* key;
    long long value;
  };
  for (const Opt& o : {Opt{"prime", prime}, Opt{"prime2", prime2}, Opt{"emax", emax},
                       Opt{"seed", seed}, Opt{"groebner_budget", groebner_budget},
                       Opt{"enum_budget", enum_budget}, Opt{"retries", retries}}) {
    facto_status st = facto_set_option(ctx.get(), o.key, o.value);
    if (st != FACTO_OK) return fail(ctx.get(), st);
  }
  const bool as_json = format == "json";

  try {
    if (*check) {
      std::vector<long long> mults = parse_csv_longs(check_mults);
      OwnedString out;
      facto_status st = facto_check(ctx.get(), check_n, check_d, mults.data(), mults.size(),
                                    check_position.c_str(), &out.s);
      if (st != FACTO_OK) return fail(ctx.get(), st);
      json j = json::parse(out.str());
      if (as_json)
        std::cout << j.dump(2) << "\n";
      else
        render_check(j, std::cout);
      return 0;
    }

    if (*analyze) {
      std::unique_ptr<facto_poly, PolyDeleter> poly;
      {
        facto_poly* raw = nullptr;
        facto_status st = facto_poly_from_file(ctx.get(), analyze_file.c_str(), &raw);
        if (st != FACTO_OK) return fail(ctx.get(), st);
        poly.reset(raw);
      }
      OwnedString out;
      facto_status st = facto_analyze(ctx.get(), poly.get(), &out.s);
      if (st != FACTO_OK) return fail(ctx.get(), st);
      json j = json::parse(out.str());
      if (as_json)
        std::cout << j.dump(2) << "\n";
      else
        render_analyze(j, std::cout);
      return 0;
    }

    if (*construct) {
      json params = json::object();
      if (family == "example52") {
        params["d"] = c_d;
        params["m"] = c_m;
      } else if (family == "prop61") {
        params["t"] = c_t;
        params["delta"] = c_delta;
      } else if (family == "cone") {
        if (cone_g.rfind("fermat", 0) == 0) {
          params["g_fermat"] = std::stoll(cone_g.substr(6));
        } else {
          params["g_poly"] = read_file(cone_g);
        }
        params["pic_z"] = pic_z;
      }
      OwnedString poly_text, sidecar;
      facto_status st = facto_construct(ctx.get(), family.c_str(), params.dump().c_str(),
                                        &poly_text.s, &sidecar.s);
      if (st != FACTO_OK) return fail(ctx.get(), st);
      json j = json::parse(sidecar.str());
      if (!out_prefix.empty()) {
        std::ofstream pf(out_prefix + ".poly");
        if (!pf) {
          std::cerr << "error: cannot write " << out_prefix << ".poly\n";
          return 2;
        }
        pf << poly_text.str();
        std::ofstream jf(out_prefix + ".json");
        jf << j.dump(2) << "\n";
        if (!as_json) std::cout << "wrote " << out_prefix << ".poly and " << out_prefix << ".json\n";
      }
      if (as_json)
        std::cout << j.dump(2) << "\n";
      else
        render_construct(j, std::cout);
      return 0;
    }

    if (*defect) {
      std::string points = read_file(defect_file);
      OwnedString out;
      facto_status st = facto_defect(ctx.get(), points.c_str(), defect_d, &out.s);
      if (st != FACTO_OK) return fail(ctx.get(), st);
      json j = json::parse(out.str());
      if (as_json)
        std::cout << j.dump(2) << "\n";
      else
        render_defect(j, std::cout);
      return 0;
    }

    if (*intersect) {
      std::vector<long long> bs = parse_csv_longs(i_bs);
      OwnedString out;
      facto_status st = facto_intersect(ctx.get(), i_a, bs.data(), bs.size(), i_n, &out.s);
      if (st != FACTO_OK) return fail(ctx.get(), st);
      json j = json::parse(out.str());
      if (as_json)
        std::cout << j.dump(2) << "\n";
      else
        render_intersect(j, std::cout);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
