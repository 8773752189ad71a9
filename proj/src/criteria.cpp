#include "criteria.hpp"

#include <algorithm>

namespace facto {

namespace {

mpz_class ipow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class floor_div(long long a, long long b) {
  // a, b >= 1 in every caller
  return mpz_class(static_cast<long>(a)) / mpz_class(static_cast<long>(b));
}

}  // namespace

std::string position_name(Position p) {
  switch (p) {
    case Position::General:
      return "general";
    case Position::ContainedInPlane:
      return "plane";
    case Position::Unknown:
      return "unknown";
  }
  return "unknown";
}

Position position_from_name(const std::string& s) {
  if (s == "general") return Position::General;
  if (s == "plane") return Position::ContainedInPlane;
  if (s == "unknown" || s.empty()) return Position::Unknown;
  throw Error(ErrorKind::InvalidArgument,
              "unknown position '" + s + "' (use general, plane or unknown)");
}

bool MultiplicityProfile::uniform() const {
  return std::adjacent_find(mults.begin(), mults.end(), std::not_equal_to<>()) == mults.end();
}

void MultiplicityProfile::validate() const {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "ambient dimension must be >= 2");
  for (long long m : mults)
    if (m < 2)
      throw Error(ErrorKind::InvalidArgument,
                  "multiplicities must be >= 2 (got " + std::to_string(m) + ")");
  if (position == Position::ContainedInPlane && n != 4)
    throw Error(ErrorKind::InvalidArgument, "plane position is only meaningful in P^4");
}

std::string verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Factorial:
      return "Factorial";
    case VerdictKind::NonFactorial:
      return "NonFactorial";
    case VerdictKind::ConjecturallyFactorial:
      return "ConjecturallyFactorial";
    case VerdictKind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

bool sum_multiplicity_bound(const MultiplicityProfile& profile) {
  mpz_class sum = 0;
  for (long long m : profile.mults) sum += static_cast<long>(m);
  return sum < static_cast<long>(profile.d);
}

bool existence_floor(long long d, long long m, long long k) {
  if (m < 1 || d < m) throw Error(ErrorKind::InvalidArgument, "existence bound needs d >= m >= 1");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "existence bound needs k >= 1");
  return ipow(floor_div(d + 5, m + 4), 4) > mpz_class(static_cast<long>(k));
}

bool factorial_floor(long long d, long long m, long long k) {
  if (m < 1 || d < m) throw Error(ErrorKind::InvalidArgument, "factorial bound needs d >= m >= 1");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "factorial bound needs k >= 1");
  mpz_class a = ipow(floor_div(d + 5, m + 4), 4);
  mpz_class b = ipow(floor_div(d, m), 4);
  return std::min(a, b) > mpz_class(static_cast<long>(k));
}

bool ratio_existence_bound(long long d, long long m, long long k) {
  if (4 * d < 5 * m) return false;
  return existence_floor(d, m, k);
}

Verdict nodal_plane_verdict(long long d, long long k, Position position) {
  Verdict v;
  mpz_class bound = ipow(mpz_class(static_cast<long>(d - 1)), 2);
  mpz_class kz(static_cast<long>(k));
  if (kz < bound) {
    v.kind = VerdictKind::Factorial;
    v.reason = "nodal-count-bound";
    return v;
  }
  if (kz == bound) {
    switch (position) {
      case Position::General:
        v.kind = VerdictKind::Factorial;
        v.reason = "nodal-boundary-general-position";
        return v;
      case Position::ContainedInPlane:
        v.kind = VerdictKind::NonFactorial;
        v.witness = "the plane through the nodes lies on the hypersurface";
        return v;
      case Position::Unknown:
        v.kind = VerdictKind::Unknown;
        return v;
    }
  }
  v.kind = VerdictKind::Unknown;
  return v;
}

bool square_sum_conjecture(const MultiplicityProfile& profile) {
  mpz_class sum = 0;
  for (long long m : profile.mults) {
    mpz_class t(static_cast<long>(m - 1));
    sum += t * t;
  }
  return sum < ipow(mpz_class(static_cast<long>(profile.d - 1)), 2);
}

bool blowup_ample(int n, long long d, long long k) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "ampleness criterion needs n >= 2");
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "ampleness criterion needs d >= 2");
  if (n == 2 && d < 3)
    throw Error(ErrorKind::InvalidArgument, "ampleness criterion needs d >= 3 when n = 2");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "ampleness criterion needs k >= 1");
  return ipow(mpz_class(static_cast<long>(d)), static_cast<unsigned long>(n)) >
         mpz_class(static_cast<long>(k));
}

bool floor_multiple_ample(int n, long long a, long long b, long long k) {
  if (a < 1 || b < 1)
    throw Error(ErrorKind::InvalidArgument, "floor ampleness bound needs a, b >= 1");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "floor ampleness bound needs n >= 1");
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "floor ampleness bound needs k >= 0");
  return ipow(floor_div(a, b), static_cast<unsigned long>(n)) > mpz_class(static_cast<long>(k));
}

BlowupClass strict_transform_class(const MultiplicityProfile& profile) {
  return BlowupClass{profile.d, profile.mults};
}

Verdict decide(const MultiplicityProfile& profile) {
  profile.validate();
  Verdict v;
  auto record = [&](const std::string& name, const std::string& hyp, bool applicable,
                    bool value) {
    v.criteria.push_back(CriterionRecord{name, hyp, applicable, value});
    return applicable && value;
  };

  const long long d = profile.d;
  const long long k = static_cast<long long>(profile.k());
  const bool in_p4 = profile.n == 4;

  // smooth case: nothing to check
  if (k == 0) {
    record("smooth-lefschetz", "k = 0", true, true);
    v.kind = VerdictKind::Factorial;
    v.reason = "smooth-lefschetz";
    return v;
  }

  mpz_class msum = 0;
  for (long long m : profile.mults) msum += static_cast<long>(m);

  // linear bound on the multiplicities
  {
    bool val = sum_multiplicity_bound(profile);
    record("sum-multiplicity-bound", "sum(m_i) = " + msum.get_str() + " < d = " + std::to_string(d),
           true, val);
    if (val) {
      v.kind = VerdictKind::Factorial;
      v.reason = "sum-multiplicity-bound";
      return v;
    }
  }

  // nodal dichotomy
  bool all_nodes = profile.uniform() && !profile.mults.empty() && profile.mults.front() == 2;
  if (all_nodes && in_p4) {
    Verdict nodal = nodal_plane_verdict(d, k, profile.position);
    mpz_class bound = mpz_class(static_cast<long>(d - 1)) * static_cast<long>(d - 1);
    record("nodal-plane-criterion",
           "k = " + std::to_string(k) + " vs (d-1)^2 = " + bound.get_str() + ", position " +
               position_name(profile.position),
           true, nodal.kind == VerdictKind::Factorial);
    if (nodal.kind != VerdictKind::Unknown) {
      nodal.criteria = v.criteria;
      return nodal;
    }
  } else {
    record("nodal-plane-criterion", "all multiplicities equal 2", false, false);
  }

  // ampleness of the strict transform at general uniform points
  bool general_uniform = in_p4 && profile.uniform() && profile.position == Position::General;
  if (general_uniform) {
    long long m = profile.mults.front();
    bool val = floor_multiple_ample(4, d, m, k);
    record("general-position-ampleness",
           "floor(d/m)^4 = floor(" + std::to_string(d) + "/" + std::to_string(m) + ")^4 > k = " +
               std::to_string(k),
           true, val);
    if (val) {
      v.kind = VerdictKind::Factorial;
      v.reason = "general-position-ampleness";
      return v;
    }
  } else {
    record("general-position-ampleness", "uniform multiplicities at general points in P^4", false,
           false);
  }

  // existence + factoriality floors (uniform general position only)
  if (general_uniform && d >= profile.mults.front()) {
    long long m = profile.mults.front();
    bool val = factorial_floor(d, m, k);
    record("factorial-floor",
           "min{floor((d+5)/(m+4))^4, floor(d/m)^4} > k = " + std::to_string(k), true, val);
    if (val) {
      v.kind = VerdictKind::Factorial;
      v.reason = "factorial-floor";
      return v;
    }
  } else {
    record("factorial-floor", "uniform multiplicities at general points in P^4", false, false);
  }

  // conjectural square bound
  if (in_p4) {
    mpz_class sq = 0;
    for (long long m : profile.mults) {
      mpz_class t(static_cast<long>(m - 1));
      sq += t * t;
    }
    mpz_class bound = mpz_class(static_cast<long>(d - 1)) * static_cast<long>(d - 1);
    bool val = square_sum_conjecture(profile);
    record("square-sum-conjecture",
           "sum (m_i-1)^2 = " + sq.get_str() + " < (d-1)^2 = " + bound.get_str(), true, val);
    if (val) {
      v.kind = VerdictKind::ConjecturallyFactorial;
      v.reason = "square-sum-conjecture";
      return v;
    }
  } else {
    record("square-sum-conjecture", "hypersurface in P^4", false, false);
  }

  v.kind = VerdictKind::Unknown;
  return v;
}

}  // namespace facto
