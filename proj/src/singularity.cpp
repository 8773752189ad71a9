#include "singularity.hpp"

#include <algorithm>
#include <numeric>

namespace facto {

HypersurfaceSpec HypersurfaceSpec::make(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "hypersurface equation is zero");
  if (!f.is_homogeneous())
    throw Error(ErrorKind::InvalidArgument, "hypersurface equation must be homogeneous");
  HypersurfaceSpec s;
  s.n = f.nvars() - 1;
  s.degree = f.degree();
  s.f = f;
  return s;
}

namespace {

unsigned lcm_upto(unsigned e_max) {
  unsigned l = 1;
  for (unsigned e = 2; e <= e_max; ++e) l = std::lcm(l, e);
  return l;
}

// Downcast a point over F_{p^E} to F_p when all coordinates are constants.
ProjectivePoint downcast_if_rational(const ProjectivePoint& pt) {
  const Field& K = *pt.field();
  if (K.kind() != Field::Kind::PrimePower) return pt;
  std::vector<Coeff> residues;
  for (const auto& c : pt.coords()) {
    const auto& v = std::get<std::vector<std::uint64_t>>(c);
    for (size_t i = 1; i < v.size(); ++i)
      if (v[i] != 0) return pt;
    residues.push_back(Coeff(v[0]));
  }
  return ProjectivePoint(Field::prime(K.prime_p()), std::move(residues));
}

bool fixed_by_frobenius_power(const Field& K, const std::vector<Coeff>& coords, unsigned e) {
  for (const auto& c : coords) {
    if (!K.equal(K.frobenius(c, e), c)) return false;
  }
  return true;
}

struct ChartSystem {
  std::vector<Polynomial> gens;  // over the base field, in the free variables
  int chart;                     // pivot coordinate index
  int free_vars;                 // = nvars - chart - 1
};

// In chart c: x_j = 0 for j < c (the point's pivot is c), x_c = 1.
ChartSystem restrict_to_chart(const std::vector<Polynomial>& gens, int chart) {
  ChartSystem out;
  out.chart = chart;
  int nvars = gens.front().nvars();
  out.free_vars = nvars - chart - 1;
  for (const auto& g : gens) {
    Polynomial h = g;
    for (int j = 0; j < chart; ++j) h = h.substitute(j, h.field()->zero());
    h = h.substitute(chart, h.field()->one());
    // variables 0..chart are now absent; drop them (index 0 shifts each time)
    for (int j = 0; j <= chart; ++j) h = h.drop_variable(0);
    out.gens.push_back(h);
  }
  return out;
}

void backtrack_points(const FieldPtr& K, const std::vector<Polynomial>& gens_K,
                      const std::vector<std::vector<Coeff>>& candidates, size_t var,
                      std::vector<Coeff>& assignment, std::uint64_t& budget,
                      std::vector<std::vector<Coeff>>& found) {
  const Field& F = *K;
  size_t nvars = candidates.size();
  if (var == nvars) {
    for (const auto& g : gens_K) {
      Coeff v = g.evaluate(assignment);
      if (!F.is_zero(v)) return;
    }
    found.push_back(assignment);
    return;
  }
  for (const Coeff& value : candidates[var]) {
    if (budget == 0)
      throw Error(ErrorKind::Budget, "point enumeration budget exhausted");
    --budget;
    assignment[var] = value;
    // prune: partially substituted generators that became nonzero constants
    bool viable = true;
    if (var + 1 < nvars) {
      for (const auto& g : gens_K) {
        Polynomial h = g;
        for (size_t i = 0; i <= var; ++i) h = h.substitute(static_cast<int>(i), assignment[i]);
        if (!h.is_zero() && h.degree() == 0) {
          viable = false;
          break;
        }
      }
    }
    if (viable)
      backtrack_points(K, gens_K, candidates, var + 1, assignment, budget, found);
  }
}

}  // namespace

std::vector<ProjectivePoint> projective_zeros(const std::vector<Polynomial>& gens,
                                              unsigned e_max, const SolveOptions& opts) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "no generators");
  FieldPtr base = gens.front().field();
  const Field& B = *base;
  if (!B.is_finite())
    throw Error(ErrorKind::InvalidArgument, "projective zero search needs a finite base field");
  if (B.kind() != Field::Kind::Prime && e_max != 1)
    throw Error(ErrorKind::InvalidArgument,
                "extension search is only supported over a prime base field");
  if (e_max == 0) throw Error(ErrorKind::InvalidArgument, "e_max must be positive");
  int nvars = gens.front().nvars();
  for (const auto& g : gens) {
    if (!g.is_homogeneous())
      throw Error(ErrorKind::InvalidArgument, "projective zero search needs homogeneous input");
    if (g.nvars() != nvars || !g.field()->same(B))
      throw Error(ErrorKind::FieldMismatch, "generators live in different rings");
  }

  unsigned E = B.kind() == Field::Kind::Prime ? lcm_upto(e_max) : 1;
  FieldPtr K = E == 1 ? base : Field::prime_power(B.prime_p(), E * B.ext_degree());
  GroebnerOptions gopts{opts.groebner_budget};
  std::uint64_t enum_budget = opts.enumeration_budget;

  std::vector<ProjectivePoint> points;
  for (int chart = 0; chart < nvars; ++chart) {
    ChartSystem cs = restrict_to_chart(gens, chart);
    std::vector<Polynomial> live;
    bool impossible = false;
    for (const auto& g : cs.gens) {
      if (g.is_zero()) continue;
      if (g.degree() == 0) {
        impossible = true;
        break;
      }
      live.push_back(g);
    }
    if (impossible) continue;

    if (cs.free_vars == 0) {
      // the coordinate point e_chart itself
      if (live.empty()) {
        std::vector<Coeff> coords(nvars, K->zero());
        coords[chart] = K->one();
        points.push_back(downcast_if_rational(ProjectivePoint(K, std::move(coords))));
      }
      continue;
    }
    if (live.empty())
      throw Error(ErrorKind::Degenerate,
                  "zero set contains a whole chart (positive-dimensional)");

    GroebnerBasis gb = buchberger(live, gopts);
    if (gb.is_unit_ideal()) continue;
    auto dim = quotient_dimension(gb);
    if (!dim)
      throw Error(ErrorKind::Degenerate,
                  "zero set is positive-dimensional over " + B.name() +
                      " (chart " + std::to_string(chart) + ")");

    // candidate coordinate values: roots of each coordinate's minimal
    // polynomial over the extension
    std::vector<std::vector<Coeff>> candidates(cs.free_vars);
    bool empty_chart = false;
    for (int v = 0; v < cs.free_vars; ++v) {
      UniPoly mp = minimal_polynomial_of_variable(gb, v);
      UniPoly mp_K = mp;
      if (!K->same(B)) {
        std::vector<Coeff> lifted;
        lifted.reserve(mp.c.size());
        for (const auto& c : mp.c) lifted.push_back(K->embed_from_prime(c));
        mp_K = uni_of_coeffs(K, std::move(lifted));
      }
      candidates[v] = uni_roots_in_field(mp_K, opts.seed + 977 * chart + v);
      if (candidates[v].empty()) {
        empty_chart = true;
        break;
      }
    }
    if (empty_chart) continue;

    std::vector<Polynomial> gens_K;
    for (const auto& g : live) gens_K.push_back(K->same(B) ? g : g.map_field(K));
    std::vector<Coeff> assignment(cs.free_vars, K->zero());
    std::vector<std::vector<Coeff>> found;
    backtrack_points(K, gens_K, candidates, 0, assignment, enum_budget, found);

    for (auto& coords : found) {
      std::vector<Coeff> full(nvars, K->zero());
      full[chart] = K->one();
      for (int v = 0; v < cs.free_vars; ++v) full[chart + 1 + v] = coords[v];
      // keep only points rational over some F_{p^e}, e <= e_max
      bool rational_enough = E == 1;
      for (unsigned e = 1; !rational_enough && e <= e_max; ++e)
        rational_enough = fixed_by_frobenius_power(*K, full, e * B.ext_degree());
      if (!rational_enough) continue;
      points.push_back(downcast_if_rational(ProjectivePoint(K, std::move(full))));
    }
  }
  std::sort(points.begin(), points.end(),
            [](const ProjectivePoint& a, const ProjectivePoint& b) { return a.before(b); });
  return points;
}

namespace {

Polynomial reduce_to_prime_field(const Polynomial& f, std::uint64_t p) {
  const Field& F = *f.field();
  if (F.kind() == Field::Kind::Prime) {
    if (F.prime_p() != p)
      throw Error(ErrorKind::InvalidArgument, "polynomial already lives over F_" +
                                                  std::to_string(F.prime_p()));
    return f;
  }
  if (F.kind() != Field::Kind::Rationals)
    throw Error(ErrorKind::InvalidArgument, "expected a rational or prime-field polynomial");
  FieldPtr Fp = Field::prime(p);
  Polynomial g = f.map_field(Fp);
  if (g.degree() != f.degree())
    throw Error(ErrorKind::BadPrime,
                "degree drops modulo " + std::to_string(p) + "; choose another prime");
  return g;
}

}  // namespace

std::vector<ProjectivePoint> singular_points(const HypersurfaceSpec& spec, std::uint64_t p,
                                             unsigned e_max, const SolveOptions& opts) {
  Polynomial f = reduce_to_prime_field(spec.f, p);
  std::vector<Polynomial> gens{f};
  for (int i = 0; i <= spec.n; ++i) {
    Polynomial d = f.derivative(i);
    if (!d.is_zero()) gens.push_back(d);
  }
  return projective_zeros(gens, e_max, opts);
}

int multiplicity_at(const HypersurfaceSpec& spec, const ProjectivePoint& pt) {
  Polynomial f = spec.f;
  if (!f.field()->same(*pt.field())) f = f.map_field(pt.field());
  Coeff v = f.evaluate(pt.coords());
  if (!f.field()->is_zero(v))
    throw Error(ErrorKind::InvalidArgument, "point does not lie on the hypersurface");
  Polynomial local = translate_and_dehomogenize(f, pt);
  if (local.is_zero())
    throw Error(ErrorKind::Degenerate, "local equation vanishes identically");
  // terms are sorted by descending degree, so the last one is minimal
  return static_cast<int>(total_degree(local.terms().back().exps));
}

Polynomial tangent_cone_at(const HypersurfaceSpec& spec, const ProjectivePoint& pt) {
  Polynomial f = spec.f;
  if (!f.field()->same(*pt.field())) f = f.map_field(pt.field());
  Polynomial local = translate_and_dehomogenize(f, pt);
  if (local.is_zero())
    throw Error(ErrorKind::Degenerate, "local equation vanishes identically");
  int m = static_cast<int>(total_degree(local.terms().back().exps));
  return local.homogeneous_component(m);
}

OrdinarinessCertificate is_ordinary(const HypersurfaceSpec& spec, const ProjectivePoint& pt,
                                    const SolveOptions& opts) {
  if (spec.n != 4)
    throw Error(ErrorKind::InvalidArgument,
                "ordinariness test is defined for threefolds in P^4");
  int m = multiplicity_at(spec, pt);
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "point is smooth, not a singular point");
  Polynomial tc = tangent_cone_at(spec, pt);
  const Field& K = *tc.field();
  if (K.is_finite() && static_cast<std::uint64_t>(m) % K.prime_p() == 0)
    throw Error(ErrorKind::BadPrime,
                "characteristic divides the multiplicity; rerun over another field");

  std::vector<Polynomial> jac;
  for (int i = 0; i < tc.nvars(); ++i) {
    Polynomial d = tc.derivative(i);
    if (!d.is_zero()) jac.push_back(d);
  }
  OrdinarinessCertificate cert;
  cert.kind = CertificateKind::ExactGroebner;
  if (jac.empty()) {
    cert.ordinary = false;
    return cert;
  }
  GroebnerBasis gb = buchberger(jac, GroebnerOptions{opts.groebner_budget});
  for (const auto& g : gb.generators()) cert.basis.push_back(g.str());
  cert.ordinary = is_irrelevant(gb);
  if (!cert.ordinary && K.is_finite()) {
    // locate a witness zero of all partials (best effort, same field)
    try {
      auto zeros = projective_zeros(jac, 1, opts);
      if (!zeros.empty()) cert.counterexample = zeros.front();
    } catch (const Error&) {
      // positive-dimensional or over budget: the basis already certifies
    }
  }
  return cert;
}

std::optional<std::uint64_t> milnor_number(const Polynomial& f_local, const SolveOptions& opts) {
  const Field& F = *f_local.field();
  if (f_local.is_zero())
    throw Error(ErrorKind::InvalidArgument, "Milnor number of the zero polynomial");
  // the function must vanish at the origin
  for (const auto& t : f_local.terms()) {
    if (total_degree(t.exps) == 0 && !F.is_zero(t.coeff))
      throw Error(ErrorKind::InvalidArgument, "local equation does not vanish at the origin");
  }
  std::vector<Polynomial> jac;
  for (int i = 0; i < f_local.nvars(); ++i) {
    Polynomial d = f_local.derivative(i);
    if (!d.is_zero()) jac.push_back(d);
  }
  if (jac.empty()) return std::nullopt;  // all partials vanish identically
  GroebnerOptions gopts{opts.groebner_budget};

  // Homogeneous gradient: the zero set is a cone, so the origin is isolated
  // iff the global quotient is finite, and then the two dimensions agree.
  if (f_local.is_homogeneous()) {
    GroebnerBasis gb = buchberger(jac, gopts);
    return quotient_dimension(gb);
  }

  // General case: the Milnor number is the LOCAL dimension at the origin.
  // dim K[x]/(J + m^N) is nondecreasing in N and supported at the origin
  // only; once two consecutive values agree, Nakayama gives m^N inside the
  // localized Jacobian ideal, so the stabilized value is exactly mu.
  auto truncated_dim = [&](unsigned N) -> std::uint64_t {
    GroebnerOptions topts = gopts;
    topts.truncate_degree = N;
    GroebnerBasis gb = buchberger(jac, topts);
    return truncated_quotient_dimension(gb, N);
  };
  constexpr unsigned kTruncationCap = 64;
  std::uint64_t prev = truncated_dim(1);
  for (unsigned N = 2; N <= kTruncationCap; ++N) {
    std::uint64_t cur = truncated_dim(N);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw Error(ErrorKind::Budget,
              "local Milnor computation did not stabilize below the truncation cap; "
              "the singularity may be non-isolated");
}

AnalyzeResult analyze(const HypersurfaceSpec& spec, const AnalyzeOptions& opts) {
  auto run_once = [&](std::uint64_t p) {
    std::vector<SingularPointReport> reports;
    auto pts = singular_points(spec, p, opts.e_max, opts.solve);
    Polynomial f_p = reduce_to_prime_field(spec.f, p);
    HypersurfaceSpec spec_p = HypersurfaceSpec::make(f_p);
    for (const auto& pt : pts) {
      SingularPointReport r{pt,    0,    Polynomial(), false, OrdinarinessCertificate{},
                            std::nullopt, std::nullopt, false};
      r.multiplicity = multiplicity_at(spec_p, pt);
      r.tangent_cone = tangent_cone_at(spec_p, pt);
      if (spec.n == 4) {
        r.certificate = is_ordinary(spec_p, pt, opts.solve);
        r.ordinary = r.certificate.ordinary;
      }
      Polynomial f_K = spec_p.f;
      if (!f_K.field()->same(*pt.field())) f_K = f_K.map_field(pt.field());
      r.milnor = milnor_number(translate_and_dehomogenize(f_K, pt), opts.solve);
      r.isolated = r.milnor.has_value();
      if (spec.n == 4 && r.ordinary) {
        std::uint64_t m1 = static_cast<std::uint64_t>(r.multiplicity - 1);
        r.expected_milnor = m1 * m1 * m1 * m1;
      }
      reports.push_back(std::move(r));
    }
    return reports;
  };

  AnalyzeResult result;
  result.prime = opts.prime;
  result.e_max = opts.e_max;
  result.reports = run_once(opts.prime);
  result.certified_scope = "F_{" + std::to_string(opts.prime) + "^e}-rational points, e <= " +
                           std::to_string(opts.e_max);

  bool rational_input = spec.f.field()->kind() == Field::Kind::Rationals;
  if (rational_input && opts.second_prime != 0 && opts.second_prime != opts.prime) {
    auto second = run_once(opts.second_prime);
    auto profile = [](const std::vector<SingularPointReport>& rs) {
      std::vector<std::tuple<int, bool, std::int64_t>> sig;
      for (const auto& r : rs)
        sig.emplace_back(r.multiplicity, r.ordinary,
                         r.milnor ? static_cast<std::int64_t>(*r.milnor) : -1);
      std::sort(sig.begin(), sig.end());
      return sig;
    };
    if (profile(result.reports) != profile(second))
      throw Error(ErrorKind::BadPrime,
                  "singularity profiles disagree between F_" + std::to_string(opts.prime) +
                      " and F_" + std::to_string(opts.second_prime) +
                      "; at least one prime is unusable for this input");
    result.two_prime_checked = true;
    result.second_prime = opts.second_prime;
  }
  return result;
}

}  // namespace facto
