#include "json_report.hpp"

#include <sstream>

namespace facto {

using nlohmann::json;

namespace {

// mpz values go out as JSON numbers when they fit, as strings otherwise
json big_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

}  // namespace

json to_json(const ProjectivePoint& pt) {
  json coords = json::array();
  for (const auto& c : pt.coords()) coords.push_back(pt.field()->str(c));
  return coords;
}

json to_json(const SingularPointReport& rep) {
  json j;
  j["point"] = to_json(rep.point);
  j["field"] = rep.point.field()->name();
  j["multiplicity"] = rep.multiplicity;
  j["ordinary"] = rep.ordinary;
  j["certificate_kind"] =
      rep.certificate.kind == CertificateKind::ExactGroebner ? "exact-groebner"
                                                             : "enumerated-probabilistic";
  if (rep.milnor)
    j["milnor"] = *rep.milnor;
  else
    j["milnor"] = nullptr;
  j["isolated"] = rep.isolated;
  if (rep.expected_milnor) j["expected_milnor"] = *rep.expected_milnor;
  // for an ordinary point the deformation-determinacy order equals the
  // multiplicity; recorded as derived metadata, never recomputed
  if (rep.ordinary) j["mu_determinacy"] = rep.multiplicity;
  j["tangent_cone"] = rep.tangent_cone.str();
  json cert;
  cert["basis"] = rep.certificate.basis;
  if (rep.certificate.counterexample)
    cert["counterexample"] = to_json(*rep.certificate.counterexample);
  j["certificate"] = cert;
  return j;
}

json to_json(const AnalyzeResult& result) {
  json j;
  j["prime"] = result.prime;
  j["e_max"] = result.e_max;
  j["certified_scope"] = result.certified_scope;
  json tp;
  tp["checked"] = result.two_prime_checked;
  if (result.two_prime_checked) {
    tp["second_prime"] = result.second_prime;
    tp["agreement"] = true;
  }
  j["two_prime"] = tp;
  json pts = json::array();
  for (const auto& rep : result.reports) pts.push_back(to_json(rep));
  j["points"] = pts;
  j["singular_count"] = result.reports.size();
  return j;
}

json to_json(const Verdict& verdict, const MultiplicityProfile& profile) {
  json j;
  j["verdict"] = verdict_name(verdict.kind);
  if (!verdict.reason.empty()) j["reason"] = verdict.reason;
  if (!verdict.witness.empty()) j["witness"] = verdict.witness;
  json crits = json::array();
  for (const auto& c : verdict.criteria) {
    json cj;
    cj["name"] = c.name;
    cj["hypothesis_text"] = c.hypothesis;
    cj["applicable"] = c.applicable;
    cj["value"] = c.value;
    crits.push_back(cj);
  }
  j["criteria"] = crits;
  json prof;
  prof["n"] = profile.n;
  prof["d"] = profile.d;
  prof["mults"] = profile.mults;
  prof["k"] = profile.k();
  prof["position"] = position_name(profile.position);
  j["profile"] = prof;
  return j;
}

json to_json(const DefectReport& report) {
  json j;
  j["k"] = report.k;
  j["degree_checked"] = report.degree_checked;
  j["monomial_count"] = big_to_json(report.monomial_count);
  j["rank"] = report.rank;
  j["defect"] = report.defect;
  j["b4"] = big_to_json(report.b4);
  return j;
}

json to_json(const ConstructionResult& result) {
  json j;
  j["family"] = result.family;
  json params;
  for (const auto& [k, v] : result.params) params[k] = v;
  j["params"] = params;
  j["degree"] = result.spec.degree;
  json expected;
  expected["count"] = result.expected_count;
  expected["multiplicity"] = result.expected_multiplicity;
  expected["ordinary"] = result.expected_ordinary;
  json pts = json::array();
  for (const auto& p : result.expected_points) pts.push_back(to_json(p));
  expected["points"] = pts;
  j["expected"] = expected;
  if (result.witness_plane)
    j["witness_plane"] = *result.witness_plane;
  else
    j["witness_plane"] = nullptr;
  if (result.factorial_iff_pic_Z)
    j["factorial_iff_pic_Z"] = *result.factorial_iff_pic_Z;
  j["seed"] = result.seed;
  j["retries"] = result.retries;
  j["verification"] = to_json(result.verification);
  return j;
}

json intersection_json(const BlowupClass& cls, int n, const mpz_class& value) {
  json j;
  j["a"] = cls.a;
  j["bs"] = cls.bs;
  j["n"] = n;
  j["intersection_number"] = big_to_json(value);
  j["positive"] = value > 0;
  return j;
}

std::vector<ProjectivePoint> parse_points_text(const std::string& text) {
  FieldPtr Q = Field::rationals();
  std::vector<ProjectivePoint> points;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    // trim
    auto is_blank = [](const std::string& s) {
      return s.find_first_not_of(" \t\r\n") == std::string::npos;
    };
    if (is_blank(line)) continue;
    std::vector<Coeff> coords;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      tok.erase(0, tok.find_first_not_of(" \t\r\n"));
      tok.erase(tok.find_last_not_of(" \t\r\n") + 1);
      if (tok.empty())
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": empty coordinate");
      try {
        mpq_class q(tok);
        q.canonicalize();
        coords.push_back(Coeff(q));
      } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(lineno) + ": bad rational '" + tok + "'");
      }
    }
    if (coords.empty())
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": no coordinates");
    points.emplace_back(Q, std::move(coords));
  }
  return points;
}

}  // namespace facto
