// extern-C surface over the core library: opaque handles, status codes,
// JSON string results.

#include "facto.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "construct.hpp"
#include "json_report.hpp"

using namespace facto;

struct facto_ctx {
  std::string last_error;
  std::uint64_t prime = 101;
  std::uint64_t prime2 = 211;
  unsigned e_max = 2;
  std::uint64_t seed = 0;
  std::uint64_t groebner_budget = 1'000'000;
  std::uint64_t enum_budget = 1'000'000;
  int retries = 32;

  AnalyzeOptions analyze_options() const {
    AnalyzeOptions o;
    o.prime = prime;
    o.second_prime = prime2;
    o.e_max = e_max;
    o.solve.groebner_budget = groebner_budget;
    o.solve.enumeration_budget = enum_budget;
    o.solve.seed = seed + 1;
    return o;
  }
  ConstructOptions construct_options() const {
    ConstructOptions o;
    o.seed = seed;
    o.max_retries = retries;
    o.analyze = analyze_options();
    return o;
  }
};

struct facto_poly {
  Polynomial p;
};

namespace {

facto_status status_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::FieldMismatch:
      return FACTO_ERR_INVALID;
    case ErrorKind::Parse:
      return FACTO_ERR_PARSE;
    case ErrorKind::Budget:
      return FACTO_ERR_BUDGET;
    case ErrorKind::Construction:
      return FACTO_ERR_CONSTRUCT;
    case ErrorKind::BadPrime:
      return FACTO_ERR_BADPRIME;
    case ErrorKind::Degenerate:
      return FACTO_ERR_DEGENERATE;
  }
  return FACTO_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
facto_status guarded(facto_ctx* ctx, F&& body) {
  if (!ctx) return FACTO_ERR_INVALID;
  ctx->last_error.clear();
  try {
    body();
    return FACTO_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return FACTO_ERR_INTERNAL;
  } catch (...) {
    ctx->last_error = "unknown error";
    return FACTO_ERR_INTERNAL;
  }
}

FieldPtr field_from_spec(const std::string& spec) {
  if (spec == "Q") return Field::rationals();
  if (spec.rfind("Fp:", 0) == 0) return Field::prime(std::stoull(spec.substr(3)));
  throw Error(ErrorKind::Parse, "unknown field spec '" + spec + "' (use Q or Fp:p)");
}

}  // namespace

extern "C" {

facto_ctx* facto_ctx_new(void) {
  try {
    // pin the intersection sign convention before handing out a context
    static const bool convention_ok = [] {
      verify_intersection_convention();
      return true;
    }();
    (void)convention_ok;
    return new facto_ctx();
  } catch (...) {
    return nullptr;
  }
}

void facto_ctx_free(facto_ctx* ctx) { delete ctx; }

const char* facto_last_error(const facto_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

facto_status facto_set_option(facto_ctx* ctx, const char* key, long long value) {
  return guarded(ctx, [&] {
    if (!key) throw Error(ErrorKind::InvalidArgument, "null option key");
    std::string k = key;
    auto positive = [&](const char* what) {
      if (value <= 0)
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be positive");
      return static_cast<std::uint64_t>(value);
    };
    if (k == "prime") {
      std::uint64_t p = positive("prime");
      if (!is_prime_u64(p)) throw Error(ErrorKind::InvalidArgument, "prime option must be prime");
      if (p == ctx->prime2) throw Error(ErrorKind::InvalidArgument, "primes must be distinct");
      ctx->prime = p;
    } else if (k == "prime2") {
      if (value == 0) {
        ctx->prime2 = 0;  // disables the agreement rerun
        return;
      }
      std::uint64_t p = positive("prime2");
      if (!is_prime_u64(p)) throw Error(ErrorKind::InvalidArgument, "prime2 option must be prime");
      if (p == ctx->prime) throw Error(ErrorKind::InvalidArgument, "primes must be distinct");
      ctx->prime2 = p;
    } else if (k == "emax") {
      std::uint64_t e = positive("emax");
      if (e > 6) throw Error(ErrorKind::InvalidArgument, "emax larger than 6 is not supported");
      ctx->e_max = static_cast<unsigned>(e);
    } else if (k == "seed") {
      if (value < 0) throw Error(ErrorKind::InvalidArgument, "seed must be nonnegative");
      ctx->seed = static_cast<std::uint64_t>(value);
    } else if (k == "groebner_budget") {
      ctx->groebner_budget = positive("groebner_budget");
    } else if (k == "enum_budget") {
      ctx->enum_budget = positive("enum_budget");
    } else if (k == "retries") {
      if (value < 0) throw Error(ErrorKind::InvalidArgument, "retries must be nonnegative");
      ctx->retries = static_cast<int>(value);
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown option '" + k + "'");
    }
  });
}

facto_status facto_poly_parse(facto_ctx* ctx, const char* text, int nvars, const char* field,
                              facto_poly** out) {
  return guarded(ctx, [&] {
    if (!text || !field || !out) throw Error(ErrorKind::InvalidArgument, "null argument");
    Polynomial p = parse_polynomial(text, nvars, field_from_spec(field));
    *out = new facto_poly{std::move(p)};
  });
}

facto_status facto_poly_from_file(facto_ctx* ctx, const char* path, facto_poly** out) {
  return guarded(ctx, [&] {
    if (!path || !out) throw Error(ErrorKind::InvalidArgument, "null argument");
    *out = new facto_poly{read_poly_file(path).poly};
  });
}

facto_status facto_poly_to_text(facto_ctx* ctx, const facto_poly* p, char** out) {
  return guarded(ctx, [&] {
    if (!p || !out) throw Error(ErrorKind::InvalidArgument, "null argument");
    *out = dup_string(write_poly_text(p->p));
  });
}

facto_status facto_poly_print(facto_ctx* ctx, const facto_poly* p, char** out) {
  return guarded(ctx, [&] {
    if (!p || !out) throw Error(ErrorKind::InvalidArgument, "null argument");
    *out = dup_string(p->p.str());
  });
}

void facto_poly_free(facto_poly* p) { delete p; }

void facto_string_free(char* s) { std::free(s); }

facto_status facto_check(facto_ctx* ctx, int n, long long d, const long long* mults, size_t k,
                         const char* position, char** json_out) {
  return guarded(ctx, [&] {
    if (!json_out || (k > 0 && !mults)) throw Error(ErrorKind::InvalidArgument, "null argument");
    MultiplicityProfile profile;
    profile.n = n;
    profile.d = d;
    profile.mults.assign(mults, mults + k);
    profile.position = position_from_name(position ? position : "unknown");
    Verdict v = decide(profile);
    *json_out = dup_string(to_json(v, profile).dump(2));
  });
}

facto_status facto_analyze(facto_ctx* ctx, const facto_poly* p, char** json_out) {
  return guarded(ctx, [&] {
    if (!p || !json_out) throw Error(ErrorKind::InvalidArgument, "null argument");
    HypersurfaceSpec spec = HypersurfaceSpec::make(p->p);
    AnalyzeOptions opts = ctx->analyze_options();
    if (spec.f.field()->kind() == Field::Kind::Prime) {
      opts.prime = spec.f.field()->prime_p();
      opts.second_prime = 0;
    }
    AnalyzeResult result = analyze(spec, opts);
    *json_out = dup_string(to_json(result).dump(2));
  });
}

facto_status facto_construct(facto_ctx* ctx, const char* family, const char* params_json,
                             char** poly_out, char** json_out) {
  return guarded(ctx, [&] {
    if (!family || !poly_out || !json_out)
      throw Error(ErrorKind::InvalidArgument, "null argument");
    nlohmann::json params = nlohmann::json::object();
    if (params_json && *params_json) {
      params = nlohmann::json::parse(params_json, nullptr, false);
      if (params.is_discarded()) throw Error(ErrorKind::Parse, "params_json does not parse");
    }
    ConstructOptions opts = ctx->construct_options();
    std::string fam = family;
    ConstructionResult result = [&] {
      if (fam == "example52") {
        int d = params.value("d", 4), m = params.value("m", 2);
        std::optional<Polynomial> f_m;
        if (params.contains("f_m"))
          f_m = parse_polynomial(params["f_m"].get<std::string>(), 4, Field::rationals());
        return construct_example52(d, m, f_m, opts);
      }
      if (fam == "prop61") {
        return construct_prop61(params.value("t", 1), params.value("delta", 2), opts);
      }
      if (fam == "kollar") return construct_kollar(opts);
      if (fam == "cone") {
        Polynomial g = [&] {
          if (params.contains("g_poly")) return read_poly_text(params["g_poly"].get<std::string>()).poly;
          return fermat_surface(params.value("g_fermat", 4));
        }();
        return construct_cone(g, params.value("pic_z", true), opts);
      }
      throw Error(ErrorKind::InvalidArgument,
                  "unknown family '" + fam + "' (example52, prop61, kollar, cone)");
    }();
    *poly_out = dup_string(write_poly_text(result.spec.f));
    *json_out = dup_string(to_json(result).dump(2));
  });
}

facto_status facto_defect(facto_ctx* ctx, const char* points_text, long long d, char** json_out) {
  return guarded(ctx, [&] {
    if (!points_text || !json_out) throw Error(ErrorKind::InvalidArgument, "null argument");
    auto points = parse_points_text(points_text);
    DefectReport report = defect(points, d);
    *json_out = dup_string(to_json(report).dump(2));
  });
}

facto_status facto_coplanar(facto_ctx* ctx, const char* points_text, int* out) {
  return guarded(ctx, [&] {
    if (!points_text || !out) throw Error(ErrorKind::InvalidArgument, "null argument");
    *out = coplanar(parse_points_text(points_text)) ? 1 : 0;
  });
}

facto_status facto_intersect(facto_ctx* ctx, long long a, const long long* bs, size_t k, int n,
                             char** json_out) {
  return guarded(ctx, [&] {
    if (!json_out || (k > 0 && !bs)) throw Error(ErrorKind::InvalidArgument, "null argument");
    BlowupClass cls{a, std::vector<long long>(bs, bs + k)};
    mpz_class value = intersection_number(cls, n);
    *json_out = dup_string(intersection_json(cls, n, value).dump(2));
  });
}

const char* facto_version(void) { return "0.1.0"; }

}  // extern "C"
