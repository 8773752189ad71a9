// Locating and classifying isolated hypersurface singularities: projective
// zero enumeration over F_{p^e}, multiplicities and tangent cones, exact
// ordinariness certificates, and Milnor numbers as Jacobian quotient
// dimensions.

#ifndef FACTO_SINGULARITY_HPP
#define FACTO_SINGULARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "poly.hpp"

namespace facto {

struct HypersurfaceSpec {
  int n;         // ambient projective dimension
  int degree;    // = deg f
  Polynomial f;  // homogeneous, nonzero, in n+1 variables

  static HypersurfaceSpec make(const Polynomial& f);
};

struct SolveOptions {
  std::uint64_t groebner_budget = 1'000'000;
  std::uint64_t enumeration_budget = 1'000'000;
  // Seed for the (deterministic) root-splitting randomness.
  std::uint64_t seed = 1;
};

struct AnalyzeOptions {
  std::uint64_t prime = 101;
  // 0 disables the agreement re-run.
  std::uint64_t second_prime = 211;
  unsigned e_max = 2;
  SolveOptions solve;
};

// All common projective zeros of a homogeneous system over F_{p^e} for
// every e <= e_max, reported in F_{p^E} with E = lcm(1..e_max) and
// downcast to F_p when rational.  Generators must live over a prime field
// unless e_max == 1 (then any finite field works).  Errors with Degenerate
// when the zero set has positive dimension over the base field.
std::vector<ProjectivePoint> projective_zeros(const std::vector<Polynomial>& gens,
                                              unsigned e_max,
                                              const SolveOptions& opts = {});

// Singular points of V(f) with F_{p^e}-rational coordinates, e <= e_max:
// common zeros of f and all its partials.  The hypersurface is reduced
// mod p when given over Q.
std::vector<ProjectivePoint> singular_points(const HypersurfaceSpec& spec,
                                             std::uint64_t p, unsigned e_max,
                                             const SolveOptions& opts = {});

// Order of vanishing of the local equation at pt (1 = smooth point).
// Errors when pt does not lie on the hypersurface.
int multiplicity_at(const HypersurfaceSpec& spec, const ProjectivePoint& pt);

// Lowest homogeneous part of the local equation at pt; degree equals the
// multiplicity, variable count is n.
Polynomial tangent_cone_at(const HypersurfaceSpec& spec, const ProjectivePoint& pt);

enum class CertificateKind { ExactGroebner, EnumeratedProbabilistic };

struct OrdinarinessCertificate {
  bool ordinary = false;
  CertificateKind kind = CertificateKind::ExactGroebner;
  // Reduced basis of the tangent cone's Jacobian ideal, as text.
  std::vector<std::string> basis;
  // A common projective zero of the partials, when one was located.
  std::optional<ProjectivePoint> counterexample;
};

// Whether the tangent cone at a singular point of a threefold in P^4 cuts
// out a smooth surface in P^3, certified by Groebner irrelevance of its
// Jacobian ideal.  Requires n == 4 and char not dividing the multiplicity.
OrdinarinessCertificate is_ordinary(const HypersurfaceSpec& spec, const ProjectivePoint& pt,
                                    const SolveOptions& opts = {});

// Milnor number of an isolated singularity at the origin: the dimension of
// the Jacobian quotient ring.  nullopt means the singular locus through
// the origin has positive dimension (non-isolated).
std::optional<std::uint64_t> milnor_number(const Polynomial& f_local,
                                           const SolveOptions& opts = {});

struct SingularPointReport {
  ProjectivePoint point;
  int multiplicity;
  Polynomial tangent_cone;
  bool ordinary;
  OrdinarinessCertificate certificate;
  std::optional<std::uint64_t> milnor;  // nullopt = infinite (non-isolated)
  std::optional<std::uint64_t> expected_milnor;
  bool isolated;
};

struct AnalyzeResult {
  std::vector<SingularPointReport> reports;
  std::uint64_t prime = 0;
  unsigned e_max = 0;
  bool two_prime_checked = false;
  std::uint64_t second_prime = 0;
  std::string certified_scope;
};

// Full report over F_{p^e}: every singular point found, with multiplicity,
// tangent cone, ordinariness and Milnor data.  When the input is rational
// the computation is repeated at the second prime and the profiles must
// agree, otherwise a BadPrime error is raised.
AnalyzeResult analyze(const HypersurfaceSpec& spec, const AnalyzeOptions& opts = {});

}  // namespace facto

#endif
