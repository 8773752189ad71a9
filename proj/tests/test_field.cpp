#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "field.hpp"

using namespace facto;

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(101));
  CHECK(is_prime_u64(211));
  CHECK(is_prime_u64(1000003));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(91));        // 7*13
  CHECK_FALSE(is_prime_u64(341));       // Fermat pseudoprime base 2
  CHECK_FALSE(is_prime_u64(1ull << 32));
}

TEST_CASE("rational field basics") {
  FieldPtr Q = Field::rationals();
  Coeff a = Q->from_mpq(mpq_class(2, 4));
  CHECK(Q->str(a) == "1/2");  // stored in lowest terms
  Coeff b = Q->from_integer(-3);
  CHECK(Q->str(Q->mul(a, b)) == "-3/2");
  CHECK(Q->is_one(Q->div(b, b)));
  CHECK_THROWS_AS(Q->inv(Q->zero()), Error);
}

TEST_CASE("prime field arithmetic") {
  FieldPtr F = Field::prime(101);
  Coeff a = F->from_integer(-1);
  CHECK(F->str(a) == "100");
  Coeff inv7 = F->inv(F->from_integer(7));
  CHECK(F->is_one(F->mul(inv7, F->from_integer(7))));
  // denominators divisible by p are not representable
  CHECK_THROWS_AS(F->from_mpq(mpq_class(1, 101)), Error);
  CHECK_THROWS_AS(Field::prime(91), Error);
}

TEST_CASE("extension field modulus is deterministic and irreducible") {
  FieldPtr K1 = Field::prime_power(101, 2);
  FieldPtr K2 = Field::prime_power(101, 2);
  CHECK(K1->modulus() == K2->modulus());
  CHECK(K1->modulus().size() == 3);
  CHECK(K1->modulus()[2] == 1);  // monic
  // no root in F_101 (degree 2 irreducible)
  const auto& m = K1->modulus();
  for (std::uint64_t x = 0; x < 101; ++x) {
    std::uint64_t acc = (m[0] + m[1] * x + m[2] * x * x) % 101;
    CHECK(acc != 0);
  }
}

TEST_CASE("extension field inverse and Frobenius") {
  FieldPtr K = Field::prime_power(101, 2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> v{rng() % 101, rng() % 101};
    Coeff a = v;
    if (K->is_zero(a)) continue;
    CHECK(K->is_one(K->mul(a, K->inv(a))));
    // Frobenius^2 is the identity on F_{p^2}
    CHECK(K->equal(K->frobenius(a, 2), a));
  }
  // elements of the prime subfield are Frobenius-fixed
  Coeff c = K->embed_from_prime(Coeff(std::uint64_t(42)));
  CHECK(K->equal(K->frobenius(c, 1), c));
}

TEST_CASE("univariate roots over prime and extension fields") {
  FieldPtr F = Field::prime(101);
  // (T - 3)(T - 5)(T^2 + 1): T^2 + 1 factors over F_101 since 101 = 1 mod 4
  UniPoly t3 = uni_of_coeffs(F, {F->from_integer(-3), F->one()});
  UniPoly t5 = uni_of_coeffs(F, {F->from_integer(-5), F->one()});
  UniPoly q = uni_of_coeffs(F, {F->one(), F->zero(), F->one()});
  UniPoly g = uni_mul(uni_mul(t3, t5), q);
  auto roots = uni_roots_in_field(g);
  CHECK(roots.size() == 4);
  bool saw3 = false, saw5 = false;
  for (const auto& r : roots) {
    if (F->equal(r, F->from_integer(3))) saw3 = true;
    if (F->equal(r, F->from_integer(5))) saw5 = true;
  }
  CHECK(saw3);
  CHECK(saw5);

  // an irreducible quadratic gains its roots in F_{p^2}
  FieldPtr F7 = Field::prime(7);
  UniPoly h = uni_of_coeffs(F7, {F7->one(), F7->zero(), F7->one()});  // T^2 + 1
  CHECK(uni_roots_in_field(h).empty());
  FieldPtr K = Field::prime_power(7, 2);
  std::vector<Coeff> lifted;
  for (const auto& c : h.c) lifted.push_back(K->embed_from_prime(c));
  UniPoly hK = uni_of_coeffs(K, std::move(lifted));
  auto ext_roots = uni_roots_in_field(hK);
  CHECK(ext_roots.size() == 2);
  for (const auto& r : ext_roots) {
    Coeff sq = K->mul(r, r);
    CHECK(K->equal(sq, K->neg(K->one())));
  }
}

TEST_CASE("root extraction is deterministic") {
  FieldPtr K = Field::prime_power(101, 2);
  std::vector<Coeff> cs;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 9; ++i) cs.push_back(K->from_integer(static_cast<long long>(rng() % 200) - 100));
  cs.push_back(K->one());
  UniPoly g = uni_of_coeffs(K, cs);
  auto r1 = uni_roots_in_field(g, 5);
  auto r2 = uni_roots_in_field(g, 5);
  REQUIRE(r1.size() == r2.size());
  for (size_t i = 0; i < r1.size(); ++i) CHECK(K->equal(r1[i], r2[i]));
}
