#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "singularity.hpp"

using namespace facto;

namespace {
FieldPtr Q = Field::rationals();

Polynomial fermat(int nvars, int d, const FieldPtr& K) {
  Polynomial f = Polynomial::zero(K, nvars);
  for (int i = 0; i < nvars; ++i) f = f + Polynomial::variable(K, nvars, i, d);
  return f;
}

ProjectivePoint qpt(std::initializer_list<long long> coords) {
  std::vector<Coeff> v;
  for (long long c : coords) v.push_back(Q->from_integer(c));
  return ProjectivePoint(Q, std::move(v));
}
}  // namespace

TEST_CASE("Milnor numbers of Fermat cones") {
  for (int m : {2, 3, 4, 5}) {
    auto mu = milnor_number(fermat(4, m, Q));
    REQUIRE(mu.has_value());
    std::uint64_t expect = 1;
    for (int i = 0; i < 4; ++i) expect *= static_cast<std::uint64_t>(m - 1);
    CHECK(*mu == expect);
  }
}

TEST_CASE("Milnor number of a non-isolated singularity is infinite") {
  Polynomial f = parse_polynomial("x0^2*x1", 4, Q);
  CHECK_FALSE(milnor_number(f).has_value());
}

TEST_CASE("Milnor numbers of Brieskorn singularities") {
  // mu(x^a + y^b + z^c + w^d) = (a-1)(b-1)(c-1)(d-1)
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 8; ++trial) {
    unsigned e[4];
    std::uint64_t expect = 1;
    std::string text;
    for (int i = 0; i < 4; ++i) {
      e[i] = 2 + static_cast<unsigned>(rng() % 3);
      expect *= e[i] - 1;
      if (i) text += " + ";
      text += "x" + std::to_string(i) + "^" + std::to_string(e[i]);
    }
    auto mu = milnor_number(parse_polynomial(text, 4, Q));
    REQUIRE(mu.has_value());
    CHECK(*mu == expect);
  }
}

TEST_CASE("Milnor numbers of ADE normal forms") {
  // A_k: x^{k+1} + y^2 + z^2 + w^2
  for (int k = 1; k <= 4; ++k) {
    std::string t = "x0^" + std::to_string(k + 1) + " + x1^2 + x2^2 + x3^2";
    CHECK(*milnor_number(parse_polynomial(t, 4, Q)) == static_cast<std::uint64_t>(k));
  }
  CHECK(*milnor_number(parse_polynomial("x0^3 + x0*x1^2 + x2^2 + x3^2", 4, Q)) == 4);  // D_4
  CHECK(*milnor_number(parse_polynomial("x0^3 + x1^4 + x2^2 + x3^2", 4, Q)) == 6);     // E_6
  CHECK(*milnor_number(parse_polynomial("x0^3 + x0*x1^3 + x2^2 + x3^2", 4, Q)) == 7);  // E_7
  CHECK(*milnor_number(parse_polynomial("x0^3 + x1^5 + x2^2 + x3^2", 4, Q)) == 8);     // E_8
}

TEST_CASE("Milnor number of inhomogeneous local equations") {
  // A_2: x0^3 + x1^2 + x2^2 + x3^2 has mu = 2
  Polynomial a2 = parse_polynomial("x0^3 + x1^2 + x2^2 + x3^2", 4, Q);
  CHECK(*milnor_number(a2) == 2);
  // adding higher-order noise to a Morse point keeps mu = 1
  Polynomial morse = parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2 + 5*x0^3 + x1^4 - 2*x0*x2^3", 4, Q);
  CHECK(*milnor_number(morse) == 1);
  // local equation must vanish at the origin
  CHECK_THROWS_AS(milnor_number(parse_polynomial("1 + x0^2", 4, Q)), Error);
}

TEST_CASE("singular point search: smooth hypersurfaces give nothing") {
  HypersurfaceSpec quadric = HypersurfaceSpec::make(fermat(5, 2, Q));
  CHECK(singular_points(quadric, 5, 1).empty());
  CHECK(singular_points(quadric, 101, 2).empty());
  CHECK(analyze(HypersurfaceSpec::make(fermat(5, 4, Q))).reports.empty());
  HypersurfaceSpec quintic = HypersurfaceSpec::make(fermat(5, 5, Q));
  CHECK(singular_points(quintic, 101, 2).empty());
  AnalyzeResult res = analyze(quintic);
  CHECK(res.reports.empty());
  CHECK(res.two_prime_checked);
}

TEST_CASE("two-prime disagreement raises the bad-prime diagnostic") {
  // smooth over Q but a rank-4 quadric modulo 101 only
  Polynomial f = parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2 + 101*x4^2", 5, Q);
  HypersurfaceSpec spec = HypersurfaceSpec::make(f);
  CHECK(singular_points(spec, 211, 1).empty());
  CHECK(singular_points(spec, 101, 1).size() == 1);
  try {
    analyze(spec);
    FAIL("expected a bad-prime diagnostic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadPrime);
  }
}

TEST_CASE("singular point search finds prescribed singularities") {
  // cone over a Fermat quartic surface: unique vertex singularity
  Polynomial g = fermat(4, 4, Q).embed({0, 1, 2, 3}, 5);
  HypersurfaceSpec cone = HypersurfaceSpec::make(g);
  auto pts = singular_points(cone, 101, 2);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == qpt({0, 0, 0, 0, 1}).map_field(Field::prime(101)));

  CHECK(multiplicity_at(cone, qpt({0, 0, 0, 0, 1})) == 4);
  Polynomial tc = tangent_cone_at(cone, qpt({0, 0, 0, 0, 1}));
  CHECK(tc.degree() == 4);
  CHECK(tc.is_homogeneous());
  CHECK(tc == fermat(4, 4, Q));
}

TEST_CASE("multiplicity requires membership") {
  HypersurfaceSpec quadric = HypersurfaceSpec::make(fermat(5, 2, Q));
  CHECK_THROWS_AS(multiplicity_at(quadric, qpt({1, 0, 0, 0, 0})), Error);
  // a smooth point has multiplicity 1
  Polynomial f = parse_polynomial("x0*x1 - x2*x3", 5, Q);
  HypersurfaceSpec spec = HypersurfaceSpec::make(f);
  CHECK(multiplicity_at(spec, qpt({1, 0, 0, 1, 0})) == 1);
}

TEST_CASE("ordinariness certificates") {
  // Fermat tangent cones are smooth whenever the characteristic is off m
  for (int m : {2, 3, 4}) {
    Polynomial f = fermat(4, m, Q).embed({0, 1, 2, 3}, 5);
    HypersurfaceSpec cone = HypersurfaceSpec::make(f);
    OrdinarinessCertificate cert = is_ordinary(cone, qpt({0, 0, 0, 0, 1}));
    CHECK(cert.ordinary);
    CHECK(cert.kind == CertificateKind::ExactGroebner);
    CHECK_FALSE(cert.basis.empty());
  }
  // a cone over a singular quadric surface is not ordinary
  Polynomial bad = parse_polynomial("x0*x3 + x1^2", 5, Q);  // rank 3 quadric, no x2
  HypersurfaceSpec spec = HypersurfaceSpec::make(bad);
  FieldPtr F = Field::prime(101);
  OrdinarinessCertificate cert = is_ordinary(HypersurfaceSpec::make(bad.map_field(F)),
                                             qpt({0, 0, 0, 0, 1}).map_field(F));
  CHECK_FALSE(cert.ordinary);
  REQUIRE(cert.counterexample.has_value());
  // the witness is the singular point [0:0:1:0] of the quadric cone
  CHECK(cert.counterexample->pivot() == 2);

  // characteristic dividing the multiplicity is refused
  Polynomial char_clash = fermat(4, 3, Q).embed({0, 1, 2, 3}, 5).map_field(Field::prime(3));
  try {
    is_ordinary(HypersurfaceSpec::make(char_clash), qpt({0, 0, 0, 0, 1}).map_field(Field::prime(3)));
    FAIL("expected a bad-prime error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadPrime);
  }
}

TEST_CASE("degree of the tangent cone equals the multiplicity") {
  // ordinary triple point at the vertex
  Polynomial g = fermat(4, 3, Q).embed({0, 1, 2, 3}, 5);
  Polynomial f = g + Polynomial::variable(Q, 5, 4) * parse_polynomial("x0^2", 5, Q);
  // f = sum x_i^3 + x4*x0^2 still has multiplicity 2 at the vertex
  HypersurfaceSpec spec = HypersurfaceSpec::make(f);
  int m = multiplicity_at(spec, qpt({0, 0, 0, 0, 1}));
  CHECK(m == 2);
  CHECK(tangent_cone_at(spec, qpt({0, 0, 0, 0, 1})).degree() == m);
}

TEST_CASE("analyze composes the full report") {
  Polynomial g = fermat(4, 4, Q).embed({0, 1, 2, 3}, 5);
  AnalyzeResult res = analyze(HypersurfaceSpec::make(g));
  REQUIRE(res.reports.size() == 1);
  const auto& rep = res.reports[0];
  CHECK(rep.multiplicity == 4);
  CHECK(rep.ordinary);
  CHECK(rep.isolated);
  REQUIRE(rep.milnor.has_value());
  CHECK(*rep.milnor == 81);
  REQUIRE(rep.expected_milnor.has_value());
  CHECK(*rep.expected_milnor == 81);
  CHECK(rep.tangent_cone.degree() == 4);
  CHECK(res.two_prime_checked);
  CHECK(res.second_prime == 211);
}

TEST_CASE("positive-dimensional singular loci are reported as degenerate") {
  // x0^2*x1 as a projective hypersurface is singular along a plane
  Polynomial f = parse_polynomial("x0^2*x1", 5, Q);
  HypersurfaceSpec spec = HypersurfaceSpec::make(f);
  try {
    singular_points(spec, 101, 1);
    FAIL("expected a degenerate-configuration error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
}

TEST_CASE("degree drop modulo a bad prime is detected") {
  Polynomial f = parse_polynomial("101*x0^3 + x1*x2^2", 5, Q) -
                 parse_polynomial("x1*x2^2", 5, Q) + parse_polynomial("101*x1^3", 5, Q);
  // f = 101*(x0^3 + x1^3): reduces to zero mod 101
  HypersurfaceSpec spec = HypersurfaceSpec::make(f);
  try {
    singular_points(spec, 101, 1);
    FAIL("expected a bad-prime error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadPrime);
  }
}
