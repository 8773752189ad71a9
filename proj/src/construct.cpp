#include "construct.hpp"

#include <algorithm>
#include <random>

#include "invariants.hpp"

namespace facto {

namespace {

// Coefficient draws use the raw mt19937_64 stream with rejection, so the
// same seed gives the same polynomial on every platform.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  long long int_in(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          (std::numeric_limits<std::uint64_t>::max() % span);
    std::uint64_t r;
    do {
      r = eng();
    } while (r >= limit);
    return lo + static_cast<long long>(r % span);
  }

  long long nonzero_in(long long lo, long long hi) {
    long long v;
    do {
      v = int_in(lo, hi);
    } while (v == 0);
    return v;
  }
};

constexpr long long kCoeffLo = -50, kCoeffHi = 50;

// Random homogeneous form of the given degree in the listed variables (an
// ambient polynomial with nvars variables); every coefficient is a nonzero
// integer from the fixed range.
Polynomial random_form(Rng& rng, int nvars, const std::vector<int>& support, int degree) {
  FieldPtr Q = Field::rationals();
  std::vector<Exponents> mons = monomials_of_degree(static_cast<int>(support.size()), degree);
  std::vector<Term> terms;
  terms.reserve(mons.size());
  for (const auto& m : mons) {
    Exponents e(nvars, 0);
    for (size_t i = 0; i < support.size(); ++i) e[support[i]] = m[i];
    terms.push_back(Term{std::move(e), Q->from_integer(rng.nonzero_in(kCoeffLo, kCoeffHi))});
  }
  return Polynomial::from_terms(Q, nvars, std::move(terms));
}

void require_smooth_surface(const Polynomial& g, const ConstructOptions& opts) {
  if (g.nvars() != 4 || g.is_zero() || !g.is_homogeneous())
    throw Error(ErrorKind::InvalidArgument,
                "expected a nonzero homogeneous polynomial in x0..x3");
  std::vector<Polynomial> jac;
  for (int i = 0; i < 4; ++i) {
    Polynomial d = g.derivative(i);
    if (!d.is_zero()) jac.push_back(d);
  }
  if (jac.empty())
    throw Error(ErrorKind::InvalidArgument, "surface equation has identically zero gradient");
  GroebnerBasis gb = buchberger(jac, GroebnerOptions{opts.analyze.solve.groebner_budget});
  if (!is_irrelevant(gb))
    throw Error(ErrorKind::InvalidArgument, "surface is singular (Jacobian ideal not irrelevant)");
}

// Closed-loop check: the analyzer must reproduce the expected profile.
// Throws Error(Construction) on a profile mismatch so callers can retry.
void verify_profile(ConstructionResult& result, const ConstructOptions& opts,
                    const std::vector<ProjectivePoint>& expected_mod_p) {
  AnalyzeResult ver = analyze(result.spec, opts.analyze);
  if (ver.reports.size() != result.expected_count)
    throw Error(ErrorKind::Construction,
                "found " + std::to_string(ver.reports.size()) + " singular points, expected " +
                    std::to_string(result.expected_count));
  for (const auto& rep : ver.reports) {
    if (rep.multiplicity != result.expected_multiplicity)
      throw Error(ErrorKind::Construction, "unexpected multiplicity at " + rep.point.str());
    if (rep.ordinary != result.expected_ordinary)
      throw Error(ErrorKind::Construction, "unexpected ordinariness at " + rep.point.str());
    if (!rep.isolated)
      throw Error(ErrorKind::Construction, "non-isolated singularity at " + rep.point.str());
  }
  if (!expected_mod_p.empty()) {
    for (const auto& want : expected_mod_p) {
      bool hit = false;
      for (const auto& rep : ver.reports)
        if (rep.point == want) {
          hit = true;
          break;
        }
      if (!hit)
        throw Error(ErrorKind::Construction, "expected singular point " + want.str() + " missing");
    }
  }
  result.verification = std::move(ver);
}

std::vector<ProjectivePoint> reduce_points(const std::vector<ProjectivePoint>& pts,
                                           std::uint64_t p) {
  FieldPtr Fp = Field::prime(p);
  std::vector<ProjectivePoint> out;
  out.reserve(pts.size());
  for (const auto& pt : pts) out.push_back(pt.map_field(Fp));
  return out;
}

bool retryable(const Error& e) {
  return e.kind() == ErrorKind::Construction || e.kind() == ErrorKind::BadPrime ||
         e.kind() == ErrorKind::Degenerate;
}

}  // namespace

Polynomial fermat_surface(int d) {
  FieldPtr Q = Field::rationals();
  Polynomial f = Polynomial::zero(Q, 4);
  for (int i = 0; i < 4; ++i)
    f = f + Polynomial::variable(Q, 4, i, static_cast<unsigned>(d));
  return f;
}

ConstructionResult construct_example52(int d, int m,
                                       const std::optional<Polynomial>& f_m_opt,
                                       const ConstructOptions& opts) {
  if (m < 2 || m >= d)
    throw Error(ErrorKind::InvalidArgument, "need 2 <= m < d for a unique m-ple point");
  FieldPtr Q = Field::rationals();
  Polynomial f_m = f_m_opt ? *f_m_opt : fermat_surface(m);
  require_smooth_surface(f_m, opts);
  if (f_m.degree() != m)
    throw Error(ErrorKind::InvalidArgument, "lowest form must have degree m");

  std::vector<int> low_vars{0, 1, 2, 3};
  Rng rng(opts.seed);
  Error last(ErrorKind::Construction, "no attempt made");
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    Polynomial f = Polynomial::zero(Q, 5);
    for (int j = m; j <= d; ++j) {
      Polynomial fj = j == m ? f_m.embed({0, 1, 2, 3}, 5)
                             : random_form(rng, 5, low_vars, j);
      Polynomial x4pow = Polynomial::variable(Q, 5, 4, static_cast<unsigned>(d - j));
      f = f + fj * x4pow;
    }
    ConstructionResult result;
    result.spec = HypersurfaceSpec::make(f);
    result.family = "example52";
    result.params = {{"d", d}, {"m", m}};
    std::vector<Coeff> vertex(5, Q->zero());
    vertex[4] = Q->one();
    result.expected_points.emplace_back(Q, vertex);
    result.expected_count = 1;
    result.expected_multiplicity = m;
    result.expected_ordinary = true;
    result.seed = opts.seed;
    result.retries = attempt;
    try {
      verify_profile(result, opts, reduce_points(result.expected_points, opts.analyze.prime));
      return result;
    } catch (const Error& e) {
      if (!retryable(e)) throw;
      last = e;
    }
  }
  throw Error(ErrorKind::Construction,
              "construction failed after " + std::to_string(opts.max_retries + 1) +
                  " attempts (seed " + std::to_string(opts.seed) + "): " + last.what());
}

Prop61Params prop61_parameters(int t, int delta) {
  if (t < 1 || delta < 1)
    throw Error(ErrorKind::InvalidArgument, "pencil construction needs t >= 1 and delta >= 1");
  return Prop61Params{static_cast<long long>(delta) * t + 1,
                      static_cast<long long>(delta) * delta, static_cast<long long>(t) + 1};
}

namespace {

// Pencil generators and exact base points in plane coordinates (x2,x3,x4).
// For delta <= 2 the pencil is anchored at prescribed rational points; for
// larger delta two random members are drawn and the base points are only
// known modulo p.
struct Pencil {
  Polynomial P, Q;                               // 3 variables, degree delta
  std::vector<std::vector<long long>> base_pts;  // rational base points, if exact
};

Pencil make_pencil(int delta, Rng& rng) {
  FieldPtr Q = Field::rationals();
  Pencil out;
  if (delta == 1) {
    // lines through [1:0:0]
    out.P = Polynomial::variable(Q, 3, 1);
    out.Q = Polynomial::variable(Q, 3, 2);
    out.base_pts = {{1, 0, 0}};
    return out;
  }
  if (delta == 2) {
    // conics through the frame [1:0:0], [0:1:0], [0:0:1], [1:1:1]
    Polynomial a = Polynomial::variable(Q, 3, 0);
    Polynomial b = Polynomial::variable(Q, 3, 1);
    Polynomial c = Polynomial::variable(Q, 3, 2);
    out.P = c * (a - b);
    out.Q = b * (a - c);
    out.base_pts = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    return out;
  }
  std::vector<int> all{0, 1, 2};
  out.P = random_form(rng, 3, all, delta);
  out.Q = random_form(rng, 3, all, delta);
  return out;
}

}  // namespace

ConstructionResult construct_prop61(int t, int delta, const ConstructOptions& opts) {
  Prop61Params par = prop61_parameters(t, delta);
  FieldPtr Q = Field::rationals();
  const int d = static_cast<int>(par.d);

  ConstructOptions run = opts;
  if (delta > 2 && run.analyze.e_max < 4) run.analyze.e_max = 4;

  Rng rng(opts.seed);
  Error last(ErrorKind::Construction, "no attempt made");
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    try {
      Pencil pencil = make_pencil(delta, rng);
      Polynomial P5 = pencil.P.embed({2, 3, 4}, 5);
      Polynomial Q5 = pencil.Q.embed({2, 3, 4}, 5);

      // distinct pencil members lambda*P + mu*Q for the two factor lists
      std::vector<std::pair<long long, long long>> used;
      auto draw_member = [&]() {
        for (int tries = 0; tries < 1000; ++tries) {
          long long l = rng.nonzero_in(kCoeffLo, kCoeffHi);
          long long mu = rng.nonzero_in(kCoeffLo, kCoeffHi);
          bool dup = false;
          for (auto [l0, m0] : used)
            if (l * m0 == mu * l0) {
              dup = true;
              break;
            }
          if (dup) continue;
          used.emplace_back(l, mu);
          return P5.scaled(Q->from_integer(l)) + Q5.scaled(Q->from_integer(mu));
        }
        throw Error(ErrorKind::Construction, "could not draw distinct pencil members");
      };

      auto product_plus_corrections = [&]() {
        Polynomial prod = Polynomial::constant(Q, 5, Q->one());
        for (int i = 0; i < t; ++i) prod = prod * draw_member();
        // correction terms: for every j in [t, delta*t] and monomial of
        // degree delta*t - j in (x2,x3,x4), a random degree-j form in
        // (x0,x1)
        Polynomial sum = prod;
        for (int j = t; j <= delta * t; ++j) {
          std::vector<Exponents> mons = monomials_of_degree(3, delta * t - j);
          for (const auto& mon : mons) {
            Polynomial phi = random_form(rng, 5, {0, 1}, j);
            Exponents e(5, 0);
            e[2] = mon[0];
            e[3] = mon[1];
            e[4] = mon[2];
            sum = sum + phi * Polynomial::monomial(Q, 5, e, Q->one());
          }
        }
        return sum;
      };

      Polynomial F = product_plus_corrections();
      Polynomial G = product_plus_corrections();
      Polynomial f = Polynomial::variable(Q, 5, 0) * F + Polynomial::variable(Q, 5, 1) * G;

      ConstructionResult result;
      result.spec = HypersurfaceSpec::make(f);
      result.family = "prop61";
      result.params = {{"t", t}, {"delta", delta}, {"d", par.d}, {"k", par.k}, {"m", par.m}};
      result.expected_count = static_cast<size_t>(par.k);
      result.expected_multiplicity = static_cast<int>(par.m);
      result.expected_ordinary = true;
      result.witness_plane = "x0 = x1 = 0";
      result.seed = opts.seed;
      result.retries = attempt;

      if (f.degree() != d || !in_coordinate_ideal(f, {0, 1}))
        throw Error(ErrorKind::Construction, "pencil assembly produced a bad equation");

      std::vector<ProjectivePoint> expected_mod_p;
      if (!pencil.base_pts.empty()) {
        for (const auto& bp : pencil.base_pts) {
          std::vector<Coeff> coords{Q->from_integer(0), Q->from_integer(0),
                                    Q->from_integer(bp[0]), Q->from_integer(bp[1]),
                                    Q->from_integer(bp[2])};
          result.expected_points.emplace_back(Q, std::move(coords));
        }
        expected_mod_p = reduce_points(result.expected_points, run.analyze.prime);
      } else {
        // base points are only known modulo p: enumerate them there and
        // lift into P^4
        FieldPtr Fp = Field::prime(run.analyze.prime);
        std::vector<Polynomial> sys{pencil.P.map_field(Fp), pencil.Q.map_field(Fp)};
        auto planar = projective_zeros(sys, run.analyze.e_max, run.analyze.solve);
        if (planar.size() != static_cast<size_t>(par.k))
          throw Error(ErrorKind::Construction,
                      "pencil base locus has " + std::to_string(planar.size()) +
                          " rational points, expected " + std::to_string(par.k));
        for (const auto& bp : planar) {
          FieldPtr K = bp.field();
          std::vector<Coeff> coords{K->zero(), K->zero(), bp.coords()[0], bp.coords()[1],
                                    bp.coords()[2]};
          expected_mod_p.emplace_back(K, std::move(coords));
        }
      }
      verify_profile(result, run, expected_mod_p);
      return result;
    } catch (const Error& e) {
      if (!retryable(e)) throw;
      last = e;
    }
  }
  throw Error(ErrorKind::Construction,
              "construction failed after " + std::to_string(opts.max_retries + 1) +
                  " attempts (seed " + std::to_string(opts.seed) + "): " + last.what());
}

ConstructionResult construct_kollar(const ConstructOptions& opts) {
  FieldPtr Q = Field::rationals();
  Rng rng(opts.seed);
  Error last(ErrorKind::Construction, "no attempt made");
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    auto c = [&]() { return Q->from_integer(rng.nonzero_in(kCoeffLo, kCoeffHi)); };
    auto var = [&](int i, unsigned e) { return Polynomial::variable(Q, 5, i, e); };
    // span of {x0^4, x1^4, (x4^2 x3 + x2^3) x0, x3^3 x1, x4^2 x1^2}
    Polynomial f = var(0, 4).scaled(c()) + var(1, 4).scaled(c()) +
                   ((var(4, 2) * var(3, 1) + var(2, 3)) * var(0, 1)).scaled(c()) +
                   (var(3, 3) * var(1, 1)).scaled(c()) + (var(4, 2) * var(1, 2)).scaled(c());
    ConstructionResult result;
    result.spec = HypersurfaceSpec::make(f);
    result.family = "kollar";
    result.params = {{"d", 4}};
    std::vector<Coeff> vertex(5, Q->zero());
    vertex[4] = Q->one();
    result.expected_points.emplace_back(Q, vertex);
    result.expected_count = 1;
    result.expected_multiplicity = 2;
    result.expected_ordinary = false;  // negative control
    result.witness_plane = "x0 = x1 = 0";
    result.seed = opts.seed;
    result.retries = attempt;
    if (!in_coordinate_ideal(f, {0, 1}))
      throw Error(ErrorKind::Construction, "quartic lost its plane");
    try {
      verify_profile(result, opts, reduce_points(result.expected_points, opts.analyze.prime));
      return result;
    } catch (const Error& e) {
      if (!retryable(e)) throw;
      last = e;
    }
  }
  throw Error(ErrorKind::Construction,
              "construction failed after " + std::to_string(opts.max_retries + 1) +
                  " attempts (seed " + std::to_string(opts.seed) + "): " + last.what());
}

ConstructionResult construct_cone(const Polynomial& g, bool pic_Z_asserted,
                                  const ConstructOptions& opts) {
  require_smooth_surface(g, opts);
  FieldPtr Q = Field::rationals();
  int d = g.degree();
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "cone needs a surface of degree >= 2");
  Polynomial f = g.embed({0, 1, 2, 3}, 5);
  ConstructionResult result;
  result.spec = HypersurfaceSpec::make(f);
  result.family = "cone";
  result.params = {{"d", d}};
  std::vector<Coeff> vertex(5, Q->zero());
  vertex[4] = Q->one();
  result.expected_points.emplace_back(Q, vertex);
  result.expected_count = 1;
  result.expected_multiplicity = d;
  result.expected_ordinary = true;
  result.factorial_iff_pic_Z = pic_Z_asserted;
  result.seed = opts.seed;
  result.retries = 0;
  verify_profile(result, opts, reduce_points(result.expected_points, opts.analyze.prime));
  return result;
}

}  // namespace facto
