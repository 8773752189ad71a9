// Generators for the explicit singular-hypersurface families, each one
// closed-loop verified: the construction is re-drawn (bounded retries)
// until the analyzer confirms the expected singularity profile.

#ifndef FACTO_CONSTRUCT_HPP
#define FACTO_CONSTRUCT_HPP

#include <map>
#include <optional>
#include <string>

#include "singularity.hpp"

namespace facto {

struct ConstructOptions {
  std::uint64_t seed = 0;
  int max_retries = 32;
  AnalyzeOptions analyze;
};

struct ConstructionResult {
  HypersurfaceSpec spec;  // over Q
  std::string family;
  std::map<std::string, long long> params;
  // Exact singular locus when it is rational; empty for pencils whose base
  // points live in extensions (then expected_count still binds).
  std::vector<ProjectivePoint> expected_points;
  size_t expected_count = 0;
  int expected_multiplicity = 0;
  bool expected_ordinary = true;
  std::optional<std::string> witness_plane;
  std::optional<bool> factorial_iff_pic_Z;
  std::uint64_t seed = 0;
  int retries = 0;
  AnalyzeResult verification;
};

// Degree-d hypersurface in P^4 with a unique ordinary m-ple point at
// [0:0:0:0:1]: x4^(d-m) f_m + x4^(d-m-1) f_{m+1} + ... + f_d with random
// forms in x0..x3.  f_m defaults to the Fermat form sum x_i^m and must cut
// out a smooth surface.
ConstructionResult construct_example52(int d, int m,
                                       const std::optional<Polynomial>& f_m_opt,
                                       const ConstructOptions& opts = {});

struct Prop61Params {
  long long d, k, m;
};
// d = delta*t + 1, k = delta^2, m = t + 1.
Prop61Params prop61_parameters(int t, int delta);

// Non-factorial degree-d hypersurface x0*F + x1*G whose singular locus is
// the delta^2 base points of a pencil of plane curves of degree delta, each
// an ordinary (t+1)-ple point; the plane {x0=x1=0} lies on it.
ConstructionResult construct_prop61(int t, int delta, const ConstructOptions& opts = {});

// Negative control: quartic from the span {x0^4, x1^4, (x4^2*x3+x2^3)*x0,
// x3^3*x1, x4^2*x1^2} with random nonzero coefficients.  Unique singular
// point [0:0:0:0:1], a NON-ordinary double point; contains {x0=x1=0}.
ConstructionResult construct_kollar(const ConstructOptions& opts = {});

// Cone over the smooth surface V(g) in P^3 (g in x0..x3): unique ordinary
// d-ple point at the vertex.  Factoriality is equivalent to the asserted
// Picard hypothesis, which this toolkit records but does not verify.
ConstructionResult construct_cone(const Polynomial& g, bool pic_Z_asserted,
                                  const ConstructOptions& opts = {});

// sum_{i<4} x_i^d over Q, in 4 variables.
Polynomial fermat_surface(int d);

}  // namespace facto

#endif
