#include "invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace facto {

mpz_class monomial_count(int n, long long e) {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(e + n), static_cast<unsigned long>(n));
  return r;
}

namespace {

void require_distinct_rational(const std::vector<ProjectivePoint>& points) {
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].field()->kind() != Field::Kind::Rationals)
      throw Error(ErrorKind::InvalidArgument, "defect/coplanarity need rational points");
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw Error(ErrorKind::InvalidArgument, "points must be pairwise distinct");
  }
}

// Clear denominators of the normalized coordinates: integer vector
// representing the same projective point.
std::vector<mpz_class> integral_coords(const ProjectivePoint& p) {
  mpz_class l = 1;
  for (const auto& c : p.coords()) {
    const mpq_class& q = std::get<mpq_class>(c);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  }
  std::vector<mpz_class> out;
  out.reserve(p.ncoords());
  for (const auto& c : p.coords()) {
    const mpq_class& q = std::get<mpq_class>(c);
    out.push_back(q.get_num() * (l / q.get_den()));
  }
  return out;
}

}  // namespace

std::vector<std::vector<mpz_class>> interpolation_matrix(
    const std::vector<ProjectivePoint>& points, long long e) {
  if (points.empty()) return {};
  int nvars = static_cast<int>(points.front().ncoords());
  std::vector<Exponents> mons = monomials_of_degree(nvars, static_cast<int>(e));
  std::vector<std::vector<mpz_class>> m;
  m.reserve(points.size());
  for (const auto& p : points) {
    std::vector<mpz_class> coords = integral_coords(p);
    std::vector<mpz_class> row;
    row.reserve(mons.size());
    for (const auto& mon : mons) {
      mpz_class v = 1;
      for (int i = 0; i < nvars; ++i) {
        for (unsigned t = 0; t < mon[i]; ++t) v *= coords[i];
      }
      row.push_back(std::move(v));
    }
    m.push_back(std::move(row));
  }
  return m;
}

size_t rank_bareiss(std::vector<std::vector<mpz_class>> m) {
  if (m.empty() || m.front().empty()) return 0;
  size_t rows = m.size(), cols = m.front().size();
  mpz_class prev = 1;
  size_t rank = 0;
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // pivot: first nonzero entry in this column at or below pivot_row
    size_t pr = pivot_row;
    while (pr < rows && m[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pivot_row], m[pr]);
    for (size_t r = pivot_row + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c) {
        mpz_class num = m[pivot_row][col] * m[r][c] - m[r][col] * m[pivot_row][c];
        mpz_divexact(m[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = m[pivot_row][col];
    ++pivot_row;
    ++rank;
  }
  return rank;
}

size_t rank_mod_p(const std::vector<std::vector<mpz_class>>& m, std::uint64_t p) {
  if (m.empty() || m.front().empty()) return 0;
  if (!is_prime_u64(p)) throw Error(ErrorKind::InvalidArgument, "rank modulus must be prime");
  size_t rows = m.size(), cols = m.front().size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  FieldPtr Fp = Field::prime(p);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c)
      a[r][c] = std::get<std::uint64_t>(Fp->from_mpz(m[r][c]));
  size_t rank = 0, pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t pr = pivot_row;
    while (pr < rows && a[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pivot_row], a[pr]);
    Coeff inv = Fp->inv(Coeff(a[pivot_row][col]));
    for (size_t r = pivot_row + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Coeff factor = Fp->mul(Coeff(a[r][col]), inv);
      for (size_t c = col; c < cols; ++c) {
        Coeff t = Fp->sub(Coeff(a[r][c]), Fp->mul(factor, Coeff(a[pivot_row][c])));
        a[r][c] = std::get<std::uint64_t>(t);
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

DefectReport defect(const std::vector<ProjectivePoint>& points, long long d) {
  if (d < 3) throw Error(ErrorKind::InvalidArgument, "defect needs degree d >= 3");
  require_distinct_rational(points);
  DefectReport rep;
  rep.k = points.size();
  rep.degree_checked = 2 * d - 5;
  int nvars = points.empty() ? 5 : static_cast<int>(points.front().ncoords());
  rep.monomial_count = monomial_count(nvars - 1, rep.degree_checked);
  if (points.empty()) {
    rep.rank = 0;
    rep.defect = 0;
    rep.b4 = 1;
    return rep;
  }
  auto m = interpolation_matrix(points, rep.degree_checked);
  rep.rank = rank_bareiss(std::move(m));
  rep.defect = rep.k - rep.rank;
  rep.b4 = 1 + static_cast<long>(rep.defect);
  return rep;
}

bool coplanar(const std::vector<ProjectivePoint>& points) {
  require_distinct_rational(points);
  if (points.empty()) return true;
  std::vector<std::vector<mpz_class>> m;
  for (const auto& p : points) m.push_back(integral_coords(p));
  return rank_bareiss(std::move(m)) <= 3;
}

namespace {

using i128 = __int128;

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class out = (hi << 64) + static_cast<unsigned long>(u & ~0ull);
  return neg ? mpz_class(-out) : out;
}

// |v|^n as int64, or nullopt on overflow
std::optional<long long> pow_checked(long long v, int n) {
  i128 r = 1;
  for (int i = 0; i < n; ++i) {
    r *= v;
    if (r > i128(1) << 62 || r < -(i128(1) << 62)) return std::nullopt;
  }
  return static_cast<long long>(r);
}

}  // namespace

mpz_class intersection_number(const BlowupClass& cls, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "intersection number needs n >= 1");
  // H^n = 1, H.E_i = 0 and E_i^n = (-1)^{n-1} give a^n - sum b_i^n.

  // single-pass int64 path with a 128-bit accumulator; runs of equal
  // coefficients are grouped so uniform classes cost one pow per run.
  // Powers that leave the 62-bit window fall back to bignum arithmetic.
  auto a_pow = pow_checked(cls.a, n);
  if (a_pow) {
    i128 total = *a_pow;
    const long long* data = cls.bs.data();
    const size_t sz = cls.bs.size();
    bool ok = true;
    size_t i = 0;
    while (i < sz) {
      long long b = data[i];
      size_t j = i + 1;
      while (j < sz && data[j] == b) ++j;
      auto p = pow_checked(b, n);
      if (!p) {
        ok = false;
        break;
      }
      total -= static_cast<i128>(*p) * static_cast<long long>(j - i);
      i = j;
    }
    if (ok) return mpz_from_i128(total);
  }

  auto pw = [n](long long v) {
    mpz_class r;
    mpz_class base(static_cast<long>(v));
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  };
  mpz_class total = pw(cls.a);
  for (long long b : cls.bs) total -= pw(b);
  return total;
}

mpz_class cone_b4(long long d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "cone invariant needs d >= 1");
  mpz_class dz(static_cast<long>(d));
  return dz * dz * dz - 4 * dz * dz + 6 * dz - 2;
}

mpz_class b4_from_defect(const DefectReport& report) { return report.b4; }

void verify_intersection_convention() {
  // reduced classes against the numeric ampleness anchor d^n - k
  for (int n = 2; n <= 5; ++n) {
    for (long long d = 2; d <= 4; ++d) {
      for (long long k = 1; k <= 5; ++k) {
        BlowupClass cls{d, std::vector<long long>(static_cast<size_t>(k), 1)};
        mpz_class expect;
        mpz_class base(static_cast<long>(d));
        mpz_pow_ui(expect.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
        expect -= static_cast<long>(k);
        if (intersection_number(cls, n) != expect)
          throw Error(ErrorKind::InvalidArgument,
                      "intersection sign convention broke the d^n - k anchor");
      }
    }
  }
  // the cone class (d, [d]) in P^4 squares to zero
  for (long long d = 1; d <= 6; ++d) {
    BlowupClass cone{d, {d}};
    if (intersection_number(cone, 4) != 0)
      throw Error(ErrorKind::InvalidArgument,
                  "intersection sign convention broke the cone-class anchor");
  }
}

}  // namespace facto
