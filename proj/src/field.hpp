// Exact coefficient fields: the rationals (GMP-backed), prime fields F_p,
// and extensions F_{p^e} built on a deterministic irreducible modulus.
// Everything downstream (polynomials, Groebner bases, point searches) is
// generic over a FieldPtr, so arithmetic stays exact in every code path.

#ifndef FACTO_FIELD_HPP
#define FACTO_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace facto {

enum class ErrorKind {
  InvalidArgument,   // bad parameters, precondition violations
  Parse,             // text does not conform to the grammar
  FieldMismatch,     // operands belong to different fields
  Budget,            // configured resource limit exhausted
  Degenerate,        // computation hit a non-zero-dimensional / unusable state
  BadPrime,          // working prime produced inconsistent results
  Construction,      // randomized construction retry budget exhausted
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

bool is_prime_u64(std::uint64_t n);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// One field element.  The active alternative is dictated by the owning
// Field: mpq_class over Q, a residue in [0,p) over F_p, and a coefficient
// vector of 1,u,...,u^{e-1} over F_{p^e}.
using Coeff = std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>>;

class Field : public std::enable_shared_from_this<Field> {
public:
  enum class Kind { Rationals, Prime, PrimePower };

  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  // Extension of degree e over F_p.  The modulus is the lexicographically
  // smallest monic irreducible of degree e (coefficients compared from the
  // leading one down), found by deterministic search, so two runs always
  // agree on how elements print.
  static FieldPtr prime_power(std::uint64_t p, unsigned e);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::Rationals; }
  std::uint64_t characteristic() const { return p_; }  // 0 over Q
  std::uint64_t prime_p() const { return p_; }
  unsigned ext_degree() const { return e_; }
  // Monic modulus, coefficients of T^0..T^e; empty over Q and F_p.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  // Field size as an integer; unset over Q.
  std::optional<mpz_class> order() const;

  bool same(const Field& other) const;
  std::string name() const;  // "Q", "F_101", "F_101^2"

  Coeff zero() const;
  Coeff one() const;
  Coeff from_integer(long long v) const;
  Coeff from_mpz(const mpz_class& v) const;
  // Errors with Parse kind when the denominator vanishes in the field.
  Coeff from_mpq(const mpq_class& v) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool equal(const Coeff& a, const Coeff& b) const;
  // Total order used only for canonical sorting/printing of results.
  bool less(const Coeff& a, const Coeff& b) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;  // errors on zero
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff pow(const Coeff& a, const mpz_class& n) const;  // n >= 0

  // a^(p^r): the r-fold Frobenius on a finite field.
  Coeff frobenius(const Coeff& a, unsigned r) const;

  std::string str(const Coeff& a) const;

  // Structure maps.  reduce: Q -> F_p (errors if the denominator is
  // divisible by p); embed: F_p -> F_{p^e} as constants.
  Coeff reduce_from_rationals(const Coeff& a) const;
  Coeff embed_from_prime(const Coeff& a) const;

private:
  Field(Kind k, std::uint64_t p, unsigned e, std::vector<std::uint64_t> mod)
      : kind_(k), p_(p), e_(e), modulus_(std::move(mod)) {}

  const std::vector<std::uint64_t>& ext(const Coeff& a) const;

  Kind kind_;
  std::uint64_t p_ = 0;
  unsigned e_ = 1;
  std::vector<std::uint64_t> modulus_;
};

// Dense univariate polynomial over an arbitrary field; coefficient of T^i
// at index i, no trailing zeros.  Used for extension-field moduli, minimal
// polynomials of coordinates, and root extraction.
struct UniPoly {
  FieldPtr field;
  std::vector<Coeff> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Coeff lead() const { return c.back(); }
};

UniPoly uni_zero(FieldPtr K);
UniPoly uni_constant(FieldPtr K, const Coeff& a);
UniPoly uni_of_coeffs(FieldPtr K, std::vector<Coeff> cs);
UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
// Division with remainder by a nonzero divisor.
void uni_divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly uni_rem(const UniPoly& a, const UniPoly& b);
UniPoly uni_monic(const UniPoly& a);
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);  // monic
Coeff uni_eval(const UniPoly& a, const Coeff& x);
// base^n mod m, n >= 0.
UniPoly uni_powmod(const UniPoly& base, const mpz_class& n, const UniPoly& m);

// All roots of g lying in its (finite, odd-characteristic) coefficient
// field, by the T^q-T filter plus equal-degree splitting.  Deterministic:
// the internal splitting randomness is seeded from `seed`, and the result
// is sorted.  Multiple roots are reported once.
std::vector<Coeff> uni_roots_in_field(const UniPoly& g, std::uint64_t seed = 1);

}  // namespace facto

#endif
