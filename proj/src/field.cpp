#include "field.hpp"

#include <algorithm>
#include <cstring>
#include <random>

namespace facto {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod_u64(u64 a, u64 n, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (n) {
    if (n & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    n >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  // extended Euclid; a nonzero mod p, p prime
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
  while (newr != 0) {
    long long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw Error(ErrorKind::InvalidArgument, "inverse of zero (or modulus not prime)");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<u64>(t);
}

// ---- dense univariate arithmetic over F_p on raw vectors (modulus search) ----

using FpVec = std::vector<u64>;

void fp_trim(FpVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpVec fp_mul(const FpVec& a, const FpVec& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  fp_trim(r);
  return r;
}

FpVec fp_rem(FpVec a, const FpVec& m, u64 p) {
  // m monic
  while (a.size() >= m.size() && !m.empty()) {
    u64 c = a.back();
    size_t shift = a.size() - m.size();
    if (c != 0) {
      for (size_t i = 0; i < m.size(); ++i)
        a[shift + i] = submod(a[shift + i], mulmod(c, m[i], p), p);
    }
    a.pop_back();
    fp_trim(a);
    if (a.size() < m.size()) break;
  }
  fp_trim(a);
  return a;
}

FpVec fp_powmod_x(const mpz_class& n, const FpVec& m, u64 p) {
  // x^n mod m
  FpVec result{1};
  FpVec base{0, 1};
  base = fp_rem(base, m, p);
  mpz_class e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = fp_rem(fp_mul(result, base, p), m, p);
    base = fp_rem(fp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

FpVec fp_gcd(FpVec a, FpVec b, u64 p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    u64 lc = invmod(b.back(), p);
    FpVec bm(b);
    for (auto& c : bm) c = mulmod(c, lc, p);
    a = fp_rem(std::move(a), bm, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 lc = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, lc, p);
  }
  return a;
}

bool fp_is_irreducible(const FpVec& f, u64 p) {
  // f monic of degree e: irreducible iff x^(p^e) == x mod f and
  // gcd(x^(p^(e/r)) - x, f) = 1 for every prime r | e.
  unsigned e = static_cast<unsigned>(f.size() - 1);
  mpz_class pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), e);
  FpVec xq = fp_powmod_x(pe, f, p);
  FpVec x{0, 1};
  x = fp_rem(x, f, p);
  if (xq != x) return false;
  auto coprime_at = [&](unsigned sub) {
    mpz_class per;
    mpz_ui_pow_ui(per.get_mpz_t(), static_cast<unsigned long>(p), sub);
    FpVec d = fp_powmod_x(per, f, p);
    if (d.size() < 2) d.resize(2, 0);
    d[1] = submod(d[1], 1, p);
    fp_trim(d);
    return fp_gcd(d, f, p).size() == 1;
  };
  unsigned rest = e;
  for (unsigned r = 2; r * r <= e; ++r) {
    if (rest % r) continue;
    while (rest % r == 0) rest /= r;
    if (!coprime_at(e / r)) return false;
  }
  if (rest > 1 && !coprime_at(e / rest)) return false;
  return true;
}

FpVec find_modulus(u64 p, unsigned e) {
  // Enumerate monic T^e + a_{e-1}T^{e-1} + ... + a_0 in lexicographic order
  // of (a_{e-1}, ..., a_0); the index N encodes the tuple base p with
  // a_{e-1} as the most significant digit.
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(p), e);
  for (mpz_class n = 0; n < total; ++n) {
    // n = a_{e-1}*p^{e-1} + ... + a_1*p + a_0, so ascending n walks the
    // tuples (a_{e-1},...,a_0) in lexicographic order.
    FpVec f(e + 1, 0);
    f[e] = 1;
    mpz_class rest = n;
    for (unsigned i = 0; i < e; ++i) {
      mpz_class digit = rest % static_cast<unsigned long>(p);
      f[i] = digit.get_ui();
      rest /= static_cast<unsigned long>(p);
    }
    if (fp_is_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible modulus found");
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin bases for 64-bit inputs
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldPtr Field::rationals() {
  static FieldPtr q(new Field(Kind::Rationals, 0, 1, {}));
  return q;
}

FieldPtr Field::prime(u64 p) {
  if (!is_prime_u64(p)) throw Error(ErrorKind::InvalidArgument, "field characteristic must be prime: " + std::to_string(p));
  if (p >= (1ull << 62)) throw Error(ErrorKind::InvalidArgument, "prime too large");
  return FieldPtr(new Field(Kind::Prime, p, 1, {}));
}

FieldPtr Field::prime_power(u64 p, unsigned e) {
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  if (e == 1) return prime(p);
  if (!is_prime_u64(p)) throw Error(ErrorKind::InvalidArgument, "field characteristic must be prime: " + std::to_string(p));
  FpVec mod = find_modulus(p, e);
  return FieldPtr(new Field(Kind::PrimePower, p, e, std::move(mod)));
}

std::optional<mpz_class> Field::order() const {
  if (kind_ == Kind::Rationals) return std::nullopt;
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), e_);
  return q;
}

bool Field::same(const Field& other) const {
  return kind_ == other.kind_ && p_ == other.p_ && e_ == other.e_;
}

std::string Field::name() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::Prime:
      return "F_" + std::to_string(p_);
    case Kind::PrimePower:
      return "F_" + std::to_string(p_) + "^" + std::to_string(e_);
  }
  return "?";
}

Coeff Field::zero() const {
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(0);
    case Kind::Prime:
      return u64(0);
    case Kind::PrimePower:
      return std::vector<u64>(e_, 0);
  }
  return u64(0);
}

Coeff Field::one() const {
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(1);
    case Kind::Prime:
      return u64(1);
    case Kind::PrimePower: {
      std::vector<u64> v(e_, 0);
      v[0] = 1;
      return v;
    }
  }
  return u64(1);
}

Coeff Field::from_integer(long long v) const { return from_mpz(mpz_class(static_cast<long>(v))); }

Coeff Field::from_mpz(const mpz_class& v) const {
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(v);
    case Kind::Prime:
    case Kind::PrimePower: {
      mpz_class r = v % static_cast<unsigned long>(p_);
      if (r < 0) r += static_cast<unsigned long>(p_);
      u64 res = r.get_ui();
      if (kind_ == Kind::Prime) return res;
      std::vector<u64> out(e_, 0);
      out[0] = res;
      return out;
    }
  }
  return u64(0);
}

Coeff Field::from_mpq(const mpq_class& v) const {
  if (kind_ == Kind::Rationals) {
    mpq_class c(v);
    c.canonicalize();
    return c;
  }
  mpz_class num = v.get_num(), den = v.get_den();
  Coeff d = from_mpz(den);
  if (is_zero(d))
    throw Error(ErrorKind::Parse, "denominator " + den.get_str() + " vanishes in " + name());
  return mul(from_mpz(num), inv(d));
}

const std::vector<u64>& Field::ext(const Coeff& a) const { return std::get<std::vector<u64>>(a); }

bool Field::is_zero(const Coeff& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return sgn(std::get<mpq_class>(a)) == 0;
    case Kind::Prime:
      return std::get<u64>(a) == 0;
    case Kind::PrimePower: {
      for (u64 c : ext(a))
        if (c) return false;
      return true;
    }
  }
  return false;
}

bool Field::is_one(const Coeff& a) const { return equal(a, one()); }

bool Field::equal(const Coeff& a, const Coeff& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return std::get<mpq_class>(a) == std::get<mpq_class>(b);
    case Kind::Prime:
      return std::get<u64>(a) == std::get<u64>(b);
    case Kind::PrimePower:
      return ext(a) == ext(b);
  }
  return false;
}

bool Field::less(const Coeff& a, const Coeff& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return std::get<mpq_class>(a) < std::get<mpq_class>(b);
    case Kind::Prime:
      return std::get<u64>(a) < std::get<u64>(b);
    case Kind::PrimePower: {
      const auto &x = ext(a), &y = ext(b);
      for (size_t i = e_; i-- > 0;) {
        if (x[i] != y[i]) return x[i] < y[i];
      }
      return false;
    }
  }
  return false;
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
    case Kind::Prime:
      return addmod(std::get<u64>(a), std::get<u64>(b), p_);
    case Kind::PrimePower: {
      std::vector<u64> r = ext(a);
      const auto& y = ext(b);
      for (unsigned i = 0; i < e_; ++i) r[i] = addmod(r[i], y[i], p_);
      return r;
    }
  }
  return a;
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
    case Kind::Prime:
      return submod(std::get<u64>(a), std::get<u64>(b), p_);
    case Kind::PrimePower: {
      std::vector<u64> r = ext(a);
      const auto& y = ext(b);
      for (unsigned i = 0; i < e_; ++i) r[i] = submod(r[i], y[i], p_);
      return r;
    }
  }
  return a;
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
    case Kind::Prime:
      return mulmod(std::get<u64>(a), std::get<u64>(b), p_);
    case Kind::PrimePower: {
      FpVec prod = fp_mul(ext(a), ext(b), p_);
      prod = fp_rem(std::move(prod), modulus_, p_);
      prod.resize(e_, 0);
      return prod;
    }
  }
  return a;
}

Coeff Field::neg(const Coeff& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(-std::get<mpq_class>(a));
    case Kind::Prime:
      return submod(0, std::get<u64>(a), p_);
    case Kind::PrimePower: {
      std::vector<u64> r = ext(a);
      for (auto& c : r) c = submod(0, c, p_);
      return r;
    }
  }
  return a;
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw Error(ErrorKind::InvalidArgument, "division by zero in " + name());
  switch (kind_) {
    case Kind::Rationals:
      return mpq_class(1 / std::get<mpq_class>(a));
    case Kind::Prime:
      return invmod(std::get<u64>(a), p_);
    case Kind::PrimePower: {
      // extended Euclid on (a, modulus) over F_p
      FpVec r0 = modulus_, r1 = ext(a);
      fp_trim(r1);
      FpVec t0{}, t1{1};
      while (!r1.empty()) {
        // q, r of r0 / r1
        FpVec q;
        FpVec rem = r0;
        u64 lc_inv = invmod(r1.back(), p_);
        while (rem.size() >= r1.size() && !rem.empty()) {
          u64 c = mulmod(rem.back(), lc_inv, p_);
          size_t shift = rem.size() - r1.size();
          if (q.size() < shift + 1) q.resize(shift + 1, 0);
          q[shift] = c;
          for (size_t i = 0; i < r1.size(); ++i)
            rem[shift + i] = submod(rem[shift + i], mulmod(c, r1[i], p_), p_);
          fp_trim(rem);
          if (rem.empty()) break;
        }
        // t0, t1 = t1, t0 - q*t1
        FpVec qt1 = fp_mul(q, t1, p_);
        FpVec nt = t0;
        if (nt.size() < qt1.size()) nt.resize(qt1.size(), 0);
        for (size_t i = 0; i < qt1.size(); ++i) nt[i] = submod(nt[i], qt1[i], p_);
        fp_trim(nt);
        t0 = std::move(t1);
        t1 = std::move(nt);
        r0 = std::move(r1);
        r1 = std::move(rem);
      }
      // r0 = gcd (degree 0 since modulus irreducible)
      if (r0.size() != 1) throw Error(ErrorKind::InvalidArgument, "modulus not irreducible");
      u64 scale = invmod(r0[0], p_);
      for (auto& c : t0) c = mulmod(c, scale, p_);
      t0.resize(e_, 0);
      return t0;
    }
  }
  return a;
}

Coeff Field::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

Coeff Field::pow(const Coeff& a, const mpz_class& n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  Coeff r = one();
  Coeff base = a;
  mpz_class e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Coeff Field::frobenius(const Coeff& a, unsigned r) const {
  if (!is_finite()) throw Error(ErrorKind::InvalidArgument, "Frobenius needs a finite field");
  mpz_class pr;
  mpz_ui_pow_ui(pr.get_mpz_t(), static_cast<unsigned long>(p_), r);
  return pow(a, pr);
}

std::string Field::str(const Coeff& a) const {
  switch (kind_) {
    case Kind::Rationals: {
      const mpq_class& q = std::get<mpq_class>(a);
      return q.get_str();
    }
    case Kind::Prime:
      return std::to_string(std::get<u64>(a));
    case Kind::PrimePower: {
      // a0 + a1*u + ... printed compactly; parenthesized by callers that
      // embed it into polynomial text
      const auto& v = ext(a);
      std::string out;
      for (unsigned i = 0; i < e_; ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
          out += std::to_string(v[i]);
        } else {
          if (v[i] != 1) out += std::to_string(v[i]) + "*";
          out += "u";
          if (i > 1) out += "^" + std::to_string(i);
        }
      }
      if (out.empty()) out = "0";
      return out;
    }
  }
  return "?";
}

Coeff Field::reduce_from_rationals(const Coeff& a) const {
  if (kind_ == Kind::Rationals) return a;
  return from_mpq(std::get<mpq_class>(a));
}

Coeff Field::embed_from_prime(const Coeff& a) const {
  u64 r = std::get<u64>(a);
  if (kind_ == Kind::Prime) return r;
  if (kind_ != Kind::PrimePower) throw Error(ErrorKind::FieldMismatch, "embed target not finite");
  std::vector<u64> out(e_, 0);
  out[0] = r;
  return out;
}

// ---------------------------------------------------------------------------
// dense univariate polynomials over a Field

namespace {
void uni_trim(UniPoly& a) {
  while (!a.c.empty() && a.field->is_zero(a.c.back())) a.c.pop_back();
}
}  // namespace

UniPoly uni_zero(FieldPtr K) { return UniPoly{std::move(K), {}}; }

UniPoly uni_constant(FieldPtr K, const Coeff& a) {
  UniPoly r{std::move(K), {a}};
  uni_trim(r);
  return r;
}

UniPoly uni_of_coeffs(FieldPtr K, std::vector<Coeff> cs) {
  UniPoly r{std::move(K), std::move(cs)};
  uni_trim(r);
  return r;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  const Field& F = *a.field;
  UniPoly r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), F.zero());
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.add(r.c[i], b.c[i]);
  uni_trim(r);
  return r;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
  const Field& F = *a.field;
  UniPoly r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), F.zero());
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.sub(r.c[i], b.c[i]);
  uni_trim(r);
  return r;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  const Field& F = *a.field;
  if (a.is_zero() || b.is_zero()) return uni_zero(a.field);
  UniPoly r{a.field, std::vector<Coeff>(a.c.size() + b.c.size() - 1, F.zero())};
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  uni_trim(r);
  return r;
}

void uni_divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  const Field& F = *a.field;
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "univariate division by zero");
  q = uni_zero(a.field);
  r = a;
  Coeff lcinv = F.inv(b.lead());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    size_t shift = static_cast<size_t>(r.degree() - b.degree());
    Coeff c = F.mul(r.c.back(), lcinv);
    if (q.c.size() < shift + 1) q.c.resize(shift + 1, F.zero());
    q.c[shift] = F.add(q.c[shift], c);
    for (size_t i = 0; i < b.c.size(); ++i)
      r.c[shift + i] = F.sub(r.c[shift + i], F.mul(c, b.c[i]));
    uni_trim(r);
  }
  uni_trim(q);
}

UniPoly uni_rem(const UniPoly& a, const UniPoly& b) {
  UniPoly q = uni_zero(a.field), r = uni_zero(a.field);
  uni_divrem(a, b, q, r);
  return r;
}

UniPoly uni_monic(const UniPoly& a) {
  if (a.is_zero()) return a;
  const Field& F = *a.field;
  Coeff s = F.inv(a.lead());
  UniPoly r = a;
  for (auto& c : r.c) c = F.mul(c, s);
  return r;
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = uni_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return uni_monic(x);
}

Coeff uni_eval(const UniPoly& a, const Coeff& x) {
  const Field& F = *a.field;
  Coeff acc = F.zero();
  for (size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

UniPoly uni_powmod(const UniPoly& base, const mpz_class& n, const UniPoly& m) {
  const Field& F = *base.field;
  UniPoly result = uni_constant(base.field, F.one());
  UniPoly b = uni_rem(base, m);
  mpz_class e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = uni_rem(uni_mul(result, b), m);
    b = uni_rem(uni_mul(b, b), m);
    e >>= 1;
  }
  return result;
}

namespace {

// equal-degree splitting of a monic squarefree product of linear factors
void split_linear(const UniPoly& r, const mpz_class& half, std::mt19937_64& rng,
                  std::vector<Coeff>& out) {
  const Field& F = *r.field;
  if (r.degree() <= 0) return;
  if (r.degree() == 1) {
    // monic T + c -> root -c
    out.push_back(F.neg(r.c[0]));
    return;
  }
  FieldPtr K = r.field;
  for (int attempt = 0; attempt < 256; ++attempt) {
    // random shift a; gcd(r, (T+a)^((q-1)/2) - 1) splits with prob ~1/2
    Coeff a = F.zero();
    if (K->kind() == Field::Kind::Prime) {
      a = Coeff(u64(rng() % K->prime_p()));
    } else {
      std::vector<u64> v(K->ext_degree());
      for (auto& d : v) d = rng() % K->prime_p();
      a = v;
    }
    UniPoly shifted = uni_of_coeffs(K, {a, F.one()});
    UniPoly t = uni_powmod(shifted, half, r);
    t = uni_sub(t, uni_constant(K, F.one()));
    UniPoly g = uni_gcd(t, r);
    if (g.degree() > 0 && g.degree() < r.degree()) {
      UniPoly q = uni_zero(K), rem = uni_zero(K);
      uni_divrem(r, g, q, rem);
      split_linear(g, half, rng, out);
      split_linear(q, half, rng, out);
      return;
    }
  }
  throw Error(ErrorKind::Budget, "root splitting failed to converge");
}

}  // namespace

std::vector<Coeff> uni_roots_in_field(const UniPoly& g, std::uint64_t seed) {
  FieldPtr K = g.field;
  const Field& F = *K;
  if (!F.is_finite()) throw Error(ErrorKind::InvalidArgument, "root scan needs a finite field");
  if (F.prime_p() == 2) throw Error(ErrorKind::InvalidArgument, "root scan needs odd characteristic");
  std::vector<Coeff> roots;
  UniPoly f = g;
  uni_trim(f);
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "root scan of the zero polynomial");
  if (f.degree() == 0) return {};
  f = uni_monic(f);
  // pull out T | f
  while (!f.c.empty() && F.is_zero(f.c[0])) {
    f.c.erase(f.c.begin());
    if (std::none_of(roots.begin(), roots.end(), [&](const Coeff& r) { return F.is_zero(r); }))
      roots.push_back(F.zero());
  }
  if (f.degree() >= 1) {
    mpz_class q = *F.order();
    if (f.degree() == 1) {
      roots.push_back(F.neg(f.c[0]));
    } else {
      UniPoly T = uni_of_coeffs(K, {F.zero(), F.one()});
      UniPoly xq = uni_powmod(T, q, f);
      UniPoly r = uni_gcd(uni_sub(xq, T), f);
      if (r.degree() >= 1) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 12345);
        mpz_class half = (q - 1) / 2;
        split_linear(r, half, rng, roots);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [&](const Coeff& a, const Coeff& b) { return F.less(a, b); });
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [&](const Coeff& a, const Coeff& b) { return F.equal(a, b); }),
              roots.end());
  return roots;
}

}  // namespace facto
