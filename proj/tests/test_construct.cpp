#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "construct.hpp"
#include "invariants.hpp"

using namespace facto;

namespace {
FieldPtr Q = Field::rationals();
}

TEST_CASE("parameter identities of the pencil family") {
  for (int t = 1; t <= 4; ++t) {
    for (int delta = 1; delta <= 3; ++delta) {
      Prop61Params par = prop61_parameters(t, delta);
      CHECK(par.d == static_cast<long long>(delta) * t + 1);
      CHECK(par.k == static_cast<long long>(delta) * delta);
      CHECK(par.m == t + 1);
      CHECK(par.k * (par.m - 1) * (par.m - 1) == (par.d - 1) * (par.d - 1));
    }
  }
  CHECK_THROWS_AS(prop61_parameters(0, 1), Error);
}

TEST_CASE("unique-singularity family: closed loop at (d,m) = (4,2)") {
  ConstructionResult r = construct_example52(4, 2, std::nullopt, {});
  CHECK(r.spec.degree == 4);
  CHECK(r.spec.n == 4);
  REQUIRE(r.verification.reports.size() == 1);
  const auto& rep = r.verification.reports[0];
  CHECK(rep.multiplicity == 2);
  CHECK(rep.ordinary);
  CHECK(*rep.milnor == 1);
  CHECK(rep.point.str() == "[0:0:0:0:1]");
  // the chart x4 = 1 recovers the prescribed lowest form
  ProjectivePoint vertex(Q, {Q->zero(), Q->zero(), Q->zero(), Q->zero(), Q->one()});
  Polynomial local = translate_and_dehomogenize(r.spec.f, vertex);
  CHECK(local.homogeneous_component(2) == fermat_surface(2));
}

TEST_CASE("unique-singularity family: minimal degree and rejects") {
  // d = m + 1 is allowed and factorial by the linear bound
  ConstructionResult r = construct_example52(3, 2, std::nullopt, {});
  CHECK(r.spec.degree == 3);
  CHECK_THROWS_AS(construct_example52(3, 3, std::nullopt, {}), Error);  // m < d violated
  // a singular lowest form is rejected up front
  Polynomial singular_cone = parse_polynomial("x0*x3 + x1^2", 4, Q);
  CHECK_THROWS_AS(construct_example52(4, 2, singular_cone, {}), Error);
}

TEST_CASE("pencil family: closed loops at small parameters") {
  // (t, delta) = (1, 2): the nodal boundary cubic
  ConstructionResult r12 = construct_prop61(1, 2, {});
  CHECK(r12.spec.degree == 3);
  CHECK(r12.expected_points.size() == 4);
  CHECK(r12.verification.reports.size() == 4);
  for (const auto& rep : r12.verification.reports) {
    CHECK(rep.multiplicity == 2);
    CHECK(rep.ordinary);
    CHECK(*rep.milnor == 1);
  }
  CHECK(in_coordinate_ideal(r12.spec.f, {0, 1}));
  CHECK(coplanar(r12.expected_points));

  // (t, delta) = (2, 1): one ordinary triple point on a cubic
  ConstructionResult r21 = construct_prop61(2, 1, {});
  CHECK(r21.spec.degree == 3);
  REQUIRE(r21.verification.reports.size() == 1);
  CHECK(r21.verification.reports[0].multiplicity == 3);
  CHECK(r21.verification.reports[0].ordinary);
  CHECK(*r21.verification.reports[0].milnor == 16);
  CHECK(in_coordinate_ideal(r21.spec.f, {0, 1}));
}

TEST_CASE("constructed equations vanish at their expected singular points") {
  ConstructionResult r = construct_prop61(1, 2, {});
  for (const auto& p : r.expected_points)
    CHECK(Q->is_zero(r.spec.f.evaluate(p.coords())));
  ConstructionResult e = construct_example52(4, 2, std::nullopt, {});
  for (const auto& p : e.expected_points)
    CHECK(Q->is_zero(e.spec.f.evaluate(p.coords())));
}

TEST_CASE("fixture singular lists are stable across good primes") {
  PolyFile pf = read_poly_file(std::string(FACTO_FIXTURES_DIR) + "/prop61_t1_d2_s0.poly");
  HypersurfaceSpec spec = HypersurfaceSpec::make(pf.poly);
  std::vector<ProjectivePoint> expect{
      ProjectivePoint(Q, {Q->zero(), Q->zero(), Q->one(), Q->zero(), Q->zero()}),
      ProjectivePoint(Q, {Q->zero(), Q->zero(), Q->zero(), Q->one(), Q->zero()}),
      ProjectivePoint(Q, {Q->zero(), Q->zero(), Q->zero(), Q->zero(), Q->one()}),
      ProjectivePoint(Q, {Q->zero(), Q->zero(), Q->one(), Q->one(), Q->one()})};
  for (std::uint64_t p : {307ull, 1009ull}) {
    auto pts = singular_points(spec, p, 2);
    REQUIRE(pts.size() == 4);
    FieldPtr Fp = Field::prime(p);
    for (const auto& want : expect) {
      ProjectivePoint reduced = want.map_field(Fp);
      bool hit = false;
      for (const auto& got : pts) hit = hit || got == reduced;
      CHECK(hit);
    }
  }
}

TEST_CASE("pencil family: construction is deterministic in the seed") {
  ConstructionResult a = construct_prop61(1, 2, {});
  ConstructionResult b = construct_prop61(1, 2, {});
  CHECK(a.spec.f == b.spec.f);
  ConstructOptions other;
  other.seed = 99;
  ConstructionResult c = construct_prop61(1, 2, other);
  CHECK_FALSE(a.spec.f == c.spec.f);
}

TEST_CASE("negative control: non-ordinary double point with a plane") {
  ConstructionResult r = construct_kollar({});
  CHECK(r.spec.degree == 4);
  REQUIRE(r.verification.reports.size() == 1);
  const auto& rep = r.verification.reports[0];
  CHECK(rep.multiplicity == 2);
  CHECK_FALSE(rep.ordinary);
  CHECK(rep.isolated);
  CHECK(in_coordinate_ideal(r.spec.f, {0, 1}));
  // tangent cone is a rank-3 quadric: a cone over a singular quadric surface
  CHECK(rep.tangent_cone.degree() == 2);
  REQUIRE(rep.certificate.counterexample.has_value());

  // bit-identical reproducibility for a fixed seed
  ConstructionResult again = construct_kollar({});
  CHECK(r.spec.f == again.spec.f);
  CHECK(write_poly_text(r.spec.f) == write_poly_text(again.spec.f));
}

TEST_CASE("cone family") {
  ConstructionResult r = construct_cone(fermat_surface(4), true, {});
  CHECK(r.spec.degree == 4);
  REQUIRE(r.verification.reports.size() == 1);
  CHECK(r.verification.reports[0].multiplicity == 4);
  CHECK(r.verification.reports[0].ordinary);
  CHECK(*r.verification.reports[0].milnor == 81);
  REQUIRE(r.factorial_iff_pic_Z.has_value());
  CHECK(*r.factorial_iff_pic_Z);

  // the strict transform class of the cone has self-intersection zero
  MultiplicityProfile prof;
  prof.d = 4;
  prof.mults = {4};
  CHECK(intersection_number(strict_transform_class(prof), 4) == 0);
  CHECK(cone_b4(4) == 22);

  // singular base surfaces are rejected
  CHECK_THROWS_AS(construct_cone(parse_polynomial("x0*x3 + x1^2", 4, Q), true, {}), Error);
}

TEST_CASE("x4-free equations really are cones") {
  ConstructionResult r = construct_cone(fermat_surface(3), true, {});
  for (const auto& t : r.spec.f.terms()) CHECK(t.exps[4] == 0);
  CHECK(r.expected_multiplicity == 3);
}
