// Linear-algebraic and intersection-theoretic invariants: interpolation
// defect of a node configuration, coplanarity, middle Betti numbers, and
// intersection numbers on point blow-ups of P^n.  Ranks are computed by
// fraction-free elimination over the integers.

#ifndef FACTO_INVARIANTS_HPP
#define FACTO_INVARIANTS_HPP

#include <vector>

#include <gmpxx.h>

#include "criteria.hpp"
#include "poly.hpp"

namespace facto {

// C(e+n, n): monomials of degree e in n+1 variables.
mpz_class monomial_count(int n, long long e);

struct DefectReport {
  size_t k = 0;
  long long degree_checked = 0;    // e = 2d - 5
  mpz_class monomial_count = 0;    // columns of the interpolation matrix
  size_t rank = 0;
  size_t defect = 0;               // k - rank
  mpz_class b4 = 1;                // 1 + defect
};

// Number of dependent conditions k nodes impose on degree-(2d-5) forms,
// from the exact rank of the evaluation matrix.  Points must be distinct
// and rational; requires d >= 3.
DefectReport defect(const std::vector<ProjectivePoint>& points, long long d);

// True iff the points span at most a plane in P^4 (coordinate matrix rank
// <= 3).  Points must be distinct.
bool coplanar(const std::vector<ProjectivePoint>& points);

// (aH - sum b_i E_i)^n = a^n - sum b_i^n on the blow-up of P^n at points.
mpz_class intersection_number(const BlowupClass& cls, int n);

// Middle Betti number of the cone over a smooth degree-d surface in P^3:
// d^3 - 4d^2 + 6d - 2.
mpz_class cone_b4(long long d);

// 1 + defect; equal to 1 exactly when a nodal hypersurface is factorial.
// Blowing up the k nodes adds exactly k to this middle Betti number (a
// documented identity, not recomputed here).
mpz_class b4_from_defect(const DefectReport& report);

// Rank of an integer matrix by Bareiss fraction-free elimination.
size_t rank_bareiss(std::vector<std::vector<mpz_class>> m);

// Rank of the same matrix reduced mod p (fast screen; never exceeds the
// exact rank).
size_t rank_mod_p(const std::vector<std::vector<mpz_class>>& m, std::uint64_t p);

// Pins the sign convention of intersection_number against its two known
// anchors (d^n - k for reduced classes, zero for the cone class); errors
// if either fails.  Cheap; run at startup.
void verify_intersection_convention();

// The interpolation matrix itself (rows = points, columns = degree-e
// monomial evaluations), exposed for the invariance property tests.
std::vector<std::vector<mpz_class>> interpolation_matrix(
    const std::vector<ProjectivePoint>& points, long long e);

}  // namespace facto

#endif
