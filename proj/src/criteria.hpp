// Numeric factoriality, existence, and ampleness criteria for threefold
// hypersurfaces with ordinary multiple points, and the composite decision
// procedure.  Everything here is exact integer arithmetic.

#ifndef FACTO_CRITERIA_HPP
#define FACTO_CRITERIA_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "field.hpp"

namespace facto {

enum class Position { General, ContainedInPlane, Unknown };

std::string position_name(Position p);
Position position_from_name(const std::string& s);

struct MultiplicityProfile {
  int n = 4;                      // ambient projective dimension
  long long d = 1;                // hypersurface degree
  std::vector<long long> mults;   // m_1..m_k, each >= 2
  Position position = Position::Unknown;

  size_t k() const { return mults.size(); }
  bool uniform() const;
  void validate() const;
};

// aH - sum b_i E_i on the blow-up of P^n at k points.
struct BlowupClass {
  long long a = 0;
  std::vector<long long> bs;
};

enum class VerdictKind { Factorial, NonFactorial, ConjecturallyFactorial, Unknown };

std::string verdict_name(VerdictKind k);

struct CriterionRecord {
  std::string name;
  std::string hypothesis;  // the numeric condition, instantiated
  bool applicable;         // whether the criterion's own preconditions held
  bool value;              // truth of the condition (false when inapplicable)
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string reason;   // criterion identifier for Factorial / Conjecturally
  std::string witness;  // description for NonFactorial
  std::vector<CriterionRecord> criteria;
};

// sum m_i < d: factorial whenever the geometric hypotheses hold.
bool sum_multiplicity_bound(const MultiplicityProfile& profile);

// floor((d+5)/(m+4))^4 > k: a degree-d hypersurface with k general ordinary
// m-ple points exists.  Requires d >= m >= 1, k >= 1.
bool existence_floor(long long d, long long m, long long k);

// min{floor((d+5)/(m+4))^4, floor(d/m)^4} > k: any such hypersurface is
// factorial.
bool factorial_floor(long long d, long long m, long long k);

// 4d >= 5m together with existence_floor: every hypersurface produced by
// the existence bound is factorial.
bool ratio_existence_bound(long long d, long long m, long long k);

// Nodal dichotomy: k < (d-1)^2 factorial; k = (d-1)^2 factorial iff the
// nodes are not coplanar; beyond that unknown.  All multiplicities must
// equal 2.
Verdict nodal_plane_verdict(long long d, long long k, Position position);

// sum (m_i - 1)^2 < (d-1)^2 (conjectural criterion; never upgraded to a
// proof by the decision procedure).
bool square_sum_conjecture(const MultiplicityProfile& profile);

// dH - sum E_i is ample on the blow-up of P^n at k general points iff
// d^n > k.  Preconditions: n >= 2, d >= 2 (d >= 3 when n = 2), k >= 1.
bool blowup_ample(int n, long long d, long long k);

// floor(a/b)^n > k makes aH - b*sum E_i ample at k general points
// (sufficient, not necessary).  Requires a, b >= 1.
bool floor_multiple_ample(int n, long long a, long long b, long long k);

// Class of the strict transform: (d, [m_1..m_k]).
BlowupClass strict_transform_class(const MultiplicityProfile& profile);

// Composite decision procedure; records every criterion evaluated.
Verdict decide(const MultiplicityProfile& profile);

}  // namespace facto

#endif
