#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "groebner.hpp"

using namespace facto;

namespace {
FieldPtr Q = Field::rationals();

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, int nvars,
                                  const FieldPtr& K) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, nvars, K));
  return out;
}
}  // namespace

TEST_CASE("already reduced basis is returned as-is") {
  auto gens = parse_all({"x0", "x1"}, 2, Q);
  GroebnerBasis gb = buchberger(gens);
  REQUIRE(gb.generators().size() == 2);
  // canonical output order is ascending grevlex on leading monomials
  CHECK(gb.generators()[0].str() == "x1");
  CHECK(gb.generators()[1].str() == "x0");
}

TEST_CASE("S-pair closure adds x1^3") {
  // hand trace: S(x0^2, x0*x1 + x1^2) = -x0*x1^2 -> reduces to x1^3
  auto gens = parse_all({"x0^2", "x0*x1 + x1^2"}, 2, Q);
  GroebnerBasis gb = buchberger(gens);
  bool has_cube = false;
  for (const auto& g : gb.generators())
    if (g.str() == "x1^3") has_cube = true;
  CHECK(has_cube);
  CHECK(gb.generators().size() == 3);
}

TEST_CASE("monomial Jacobian bases") {
  // partials of sum x_i^m are x_i^{m-1} up to scalars
  for (int m : {3, 5}) {
    Polynomial f = Polynomial::zero(Q, 4);
    for (int i = 0; i < 4; ++i) f = f + Polynomial::variable(Q, 4, i, m);
    std::vector<Polynomial> jac;
    for (int i = 0; i < 4; ++i) jac.push_back(f.derivative(i));
    GroebnerBasis gb = buchberger(jac);
    REQUIRE(gb.generators().size() == 4);
    for (const auto& g : gb.generators()) {
      CHECK(g.terms().size() == 1);
      CHECK(g.degree() == m - 1);
    }
  }
}

TEST_CASE("reduced basis is canonical under generator shuffling and scaling") {
  std::mt19937_64 rng(3);
  auto gens = parse_all({"x0^2 - x1*x2", "x0*x1 - x2^2", "x1^2 - x0*x2"}, 3, Q);
  GroebnerBasis ref = buchberger(gens);
  for (int trial = 0; trial < 10; ++trial) {
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled)
      g = g.scaled(Q->from_integer(1 + static_cast<long long>(rng() % 5)));
    GroebnerBasis gb = buchberger(shuffled);
    REQUIRE(gb.generators().size() == ref.generators().size());
    for (size_t i = 0; i < gb.generators().size(); ++i)
      CHECK(gb.generators()[i] == ref.generators()[i]);
  }
}

TEST_CASE("quotient dimensions") {
  CHECK(*quotient_dimension(buchberger(parse_all({"x0", "x1", "x2", "x3"}, 4, Q))) == 1);
  CHECK_FALSE(quotient_dimension(buchberger(parse_all({"x0"}, 2, Q))).has_value());
  for (int m : {2, 3, 4}) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(Polynomial::variable(Q, 4, i, m - 1));
    auto dim = quotient_dimension(buchberger(gens));
    REQUIRE(dim.has_value());
    CHECK(*dim == static_cast<std::uint64_t>((m - 1) * (m - 1) * (m - 1) * (m - 1)));
  }
}

TEST_CASE("irrelevance detection") {
  CHECK(is_irrelevant(buchberger(parse_all({"x0^2", "x1^3", "x2"}, 3, Q))));
  CHECK_FALSE(is_irrelevant(buchberger(parse_all({"x0", "x1*x2"}, 3, Q))));
}

TEST_CASE("normal form decides ideal membership") {
  auto gens = parse_all({"x0^2 - x1", "x1^2 - x0*x1"}, 2, Q);
  GroebnerBasis gb = buchberger(gens);
  Polynomial member = parse_polynomial("x0^2 - x1", 2, Q) * parse_polynomial("x0 + x1", 2, Q);
  CHECK(normal_form(member, gb).is_zero());
  CHECK_FALSE(normal_form(parse_polynomial("x0", 2, Q), gb).is_zero());
}

TEST_CASE("minimal polynomial of a coordinate in the quotient") {
  FieldPtr F = Field::prime(101);
  // V(x0^2 - 1, x1 - x0): x0 takes values 1 and -1
  auto gens = parse_all({"x0^2 - 1", "x1 - x0"}, 2, F);
  GroebnerBasis gb = buchberger(gens);
  UniPoly mp = minimal_polynomial_of_variable(gb, 0);
  REQUIRE(mp.degree() == 2);
  // T^2 - 1
  CHECK(F->is_one(mp.c[2]));
  CHECK(F->is_zero(mp.c[1]));
  CHECK(F->equal(mp.c[0], F->from_integer(-1)));
  auto roots = uni_roots_in_field(mp);
  CHECK(roots.size() == 2);
}

TEST_CASE("every S-polynomial of a reduced basis reduces to zero") {
  auto check_spolys = [](const GroebnerBasis& gb) {
    const auto& gens = gb.generators();
    const FieldPtr K = gb.field();
    for (size_t i = 0; i < gens.size(); ++i) {
      for (size_t j = i + 1; j < gens.size(); ++j) {
        const Term& a = gens[i].leading_term();
        const Term& b = gens[j].leading_term();
        Exponents lcm(a.exps.size());
        for (size_t v = 0; v < lcm.size(); ++v) lcm[v] = std::max(a.exps[v], b.exps[v]);
        Exponents sa(lcm.size()), sb(lcm.size());
        for (size_t v = 0; v < lcm.size(); ++v) {
          sa[v] = lcm[v] - a.exps[v];
          sb[v] = lcm[v] - b.exps[v];
        }
        Polynomial s =
            gens[i] * Polynomial::monomial(K, gb.nvars(), sa, K->inv(a.coeff)) -
            gens[j] * Polynomial::monomial(K, gb.nvars(), sb, K->inv(b.coeff));
        CHECK(normal_form(s, gb).is_zero());
      }
    }
  };
  check_spolys(buchberger(parse_all({"x0^2", "x0*x1 + x1^2"}, 2, Q)));
  check_spolys(buchberger(parse_all({"x0^2 - x1*x2", "x0*x1 - x2^2", "x1^2 - x0*x2"}, 3, Q)));
  FieldPtr F = Field::prime(101);
  check_spolys(buchberger(parse_all({"x0^3 - x1*x2 + 5", "x1^2 - 7*x0", "x2^2 - x0*x1"}, 3, F)));
}

TEST_CASE("budget exhaustion raises a distinct error") {
  // this pair needs at least one honest reduction step
  auto gens = parse_all({"x0^2", "x0*x1 + x1^2"}, 2, Q);
  GroebnerOptions opts;
  opts.step_budget = 0;
  try {
    buchberger(gens, opts);
    FAIL("expected budget exhaustion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Budget);
  }
}

TEST_CASE("truncated run agrees with explicit power-of-m generators") {
  std::mt19937_64 rng(17);
  FieldPtr F = Field::prime(101);
  for (int trial = 0; trial < 20; ++trial) {
    // random inhomogeneous ideals vanishing at the origin
    std::vector<Polynomial> gens;
    int ngens = 2 + static_cast<int>(rng() % 3);
    for (int g = 0; g < ngens; ++g) {
      std::vector<Term> terms;
      int nterms = 2 + static_cast<int>(rng() % 4);
      for (int t = 0; t < nterms; ++t) {
        Exponents e(3, 0);
        int deg = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j < deg; ++j) e[rng() % 3] += 1;
        terms.push_back(Term{std::move(e), F->from_integer(static_cast<long long>(rng() % 100) + 1)});
      }
      gens.push_back(Polynomial::from_terms(F, 3, terms));
    }
    for (unsigned N : {2u, 4u, 6u}) {
      GroebnerOptions topts;
      topts.truncate_degree = N;
      std::uint64_t fast = truncated_quotient_dimension(buchberger(gens, topts), N);

      std::vector<Polynomial> padded = gens;
      for (const auto& e : monomials_of_degree(3, static_cast<int>(N)))
        padded.push_back(Polynomial::monomial(F, 3, e, F->one()));
      auto slow = quotient_dimension(buchberger(padded));
      REQUIRE(slow.has_value());
      CHECK(fast == *slow);
    }
  }
}
