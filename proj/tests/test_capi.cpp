// Exercises the shared-library C interface end to end: handles, status
// codes, JSON payloads, error reporting.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "facto.h"

using nlohmann::json;

namespace {

struct Ctx {
  facto_ctx* c;
  Ctx() : c(facto_ctx_new()) { REQUIRE(c != nullptr); }
  ~Ctx() { facto_ctx_free(c); }
};

struct Str {
  char* s = nullptr;
  ~Str() { facto_string_free(s); }
};

}  // namespace

TEST_CASE("version string") {
  CHECK(std::string(facto_version()) == "0.1.0");
}

TEST_CASE("polynomial handles round-trip") {
  Ctx ctx;
  facto_poly* p = nullptr;
  REQUIRE(facto_poly_parse(ctx.c, "x0^2 + 2*x1*x2", 3, "Q", &p) == FACTO_OK);
  Str text;
  REQUIRE(facto_poly_print(ctx.c, p, &text.s) == FACTO_OK);
  CHECK(std::string(text.s) == "x0^2 + 2*x1*x2");
  Str file_text;
  REQUIRE(facto_poly_to_text(ctx.c, p, &file_text.s) == FACTO_OK);
  CHECK(std::string(file_text.s).rfind("nvars=3 field=Q\n", 0) == 0);
  facto_poly_free(p);

  facto_poly* bad = nullptr;
  CHECK(facto_poly_parse(ctx.c, "x9 + 1", 3, "Q", &bad) == FACTO_ERR_PARSE);
  CHECK(std::string(facto_last_error(ctx.c)).find("x9") != std::string::npos);
}

TEST_CASE("options validation") {
  Ctx ctx;
  CHECK(facto_set_option(ctx.c, "prime", 103) == FACTO_OK);
  CHECK(facto_set_option(ctx.c, "prime", 100) == FACTO_ERR_INVALID);
  CHECK(facto_set_option(ctx.c, "prime2", 103) == FACTO_ERR_INVALID);  // must differ
  CHECK(facto_set_option(ctx.c, "prime2", 0) == FACTO_OK);             // disables rerun
  CHECK(facto_set_option(ctx.c, "nope", 1) == FACTO_ERR_INVALID);
  CHECK(facto_set_option(ctx.c, "emax", 3) == FACTO_OK);
  CHECK(facto_set_option(ctx.c, "seed", 7) == FACTO_OK);
}

TEST_CASE("criteria table over the C interface") {
  Ctx ctx;
  long long mults[] = {2, 2};
  Str out;
  REQUIRE(facto_check(ctx.c, 4, 5, mults, 2, "unknown", &out.s) == FACTO_OK);
  json j = json::parse(out.s);
  CHECK(j["verdict"] == "Factorial");
  CHECK(j["reason"] == "sum-multiplicity-bound");
  CHECK(j["criteria"].is_array());
  CHECK(j["profile"]["k"] == 2);

  long long nodes[] = {2, 2, 2, 2};
  Str plane_out;
  REQUIRE(facto_check(ctx.c, 4, 3, nodes, 4, "plane", &plane_out.s) == FACTO_OK);
  CHECK(json::parse(plane_out.s)["verdict"] == "NonFactorial");

  Str unknown_out;
  REQUIRE(facto_check(ctx.c, 4, 3, nodes, 4, "unknown", &unknown_out.s) == FACTO_OK);
  CHECK(json::parse(unknown_out.s)["verdict"] == "Unknown");

  Str bad;
  CHECK(facto_check(ctx.c, 4, 3, nodes, 4, "sideways", &bad.s) == FACTO_ERR_INVALID);
}

TEST_CASE("analyze a bundled fixture") {
  Ctx ctx;
  facto_poly* p = nullptr;
  std::string path = std::string(FACTO_FIXTURES_DIR) + "/example52_d4_m2_s0.poly";
  REQUIRE(facto_poly_from_file(ctx.c, path.c_str(), &p) == FACTO_OK);
  Str out;
  REQUIRE(facto_analyze(ctx.c, p, &out.s) == FACTO_OK);
  facto_poly_free(p);
  json j = json::parse(out.s);
  CHECK(j["singular_count"] == 1);
  CHECK(j["points"][0]["multiplicity"] == 2);
  CHECK(j["points"][0]["ordinary"] == true);
  CHECK(j["points"][0]["milnor"] == 1);
  CHECK(j["points"][0]["certificate_kind"] == "exact-groebner");
  CHECK(j["two_prime"]["checked"] == true);
  CHECK(j["two_prime"]["agreement"] == true);
}

TEST_CASE("construct through the C interface is deterministic") {
  Ctx ctx;
  Str poly1, json1, poly2, json2;
  REQUIRE(facto_construct(ctx.c, "prop61", "{\"t\":1,\"delta\":2}", &poly1.s, &json1.s) ==
          FACTO_OK);
  REQUIRE(facto_construct(ctx.c, "prop61", "{\"t\":1,\"delta\":2}", &poly2.s, &json2.s) ==
          FACTO_OK);
  CHECK(std::string(poly1.s) == std::string(poly2.s));
  json j = json::parse(json1.s);
  CHECK(j["degree"] == 3);
  CHECK(j["expected"]["count"] == 4);
  CHECK(j["witness_plane"] == "x0 = x1 = 0");
  CHECK(j["verification"]["singular_count"] == 4);

  Str p3, j3;
  CHECK(facto_construct(ctx.c, "nonsense", "{}", &p3.s, &j3.s) == FACTO_ERR_INVALID);
}

TEST_CASE("defect and coplanarity through the C interface") {
  Ctx ctx;
  const char* pts = "0,0,1,0,0\n0,0,0,1,0\n0,0,0,0,1\n0,0,1,1,1\n";
  Str out;
  REQUIRE(facto_defect(ctx.c, pts, 3, &out.s) == FACTO_OK);
  json j = json::parse(out.s);
  CHECK(j["k"] == 4);
  CHECK(j["rank"] == 3);
  CHECK(j["defect"] == 1);
  CHECK(j["b4"] == 2);

  int flat = 0;
  REQUIRE(facto_coplanar(ctx.c, pts, &flat) == FACTO_OK);
  CHECK(flat == 1);

  CHECK(facto_defect(ctx.c, "1,2\nbad\n", 3, &out.s) == FACTO_ERR_PARSE);
}

TEST_CASE("intersection numbers through the C interface") {
  Ctx ctx;
  long long ones[] = {1, 1, 1, 1};
  Str out;
  REQUIRE(facto_intersect(ctx.c, 3, ones, 4, 4, &out.s) == FACTO_OK);
  json j = json::parse(out.s);
  CHECK(j["intersection_number"] == 77);  // 81 - 4
  CHECK(j["positive"] == true);

  long long cone[] = {4};
  Str zero;
  REQUIRE(facto_intersect(ctx.c, 4, cone, 1, 4, &zero.s) == FACTO_OK);
  CHECK(json::parse(zero.s)["intersection_number"] == 0);
}

TEST_CASE("analyze a prime-field input (single-prime mode)") {
  Ctx ctx;
  facto_poly* p = nullptr;
  // rank-4 quadric: unique ordinary node at [0:0:0:0:1]
  REQUIRE(facto_poly_parse(ctx.c, "x0*x1 - x2*x3", 5, "Fp:101", &p) == FACTO_OK);
  Str out;
  REQUIRE(facto_analyze(ctx.c, p, &out.s) == FACTO_OK);
  facto_poly_free(p);
  json j = json::parse(out.s);
  CHECK(j["prime"] == 101);
  CHECK(j["singular_count"] == 1);
  CHECK(j["points"][0]["point"] == json::array({"0", "0", "0", "0", "1"}));
  CHECK(j["points"][0]["ordinary"] == true);
  CHECK(j["points"][0]["milnor"] == 1);
  CHECK(j["two_prime"]["checked"] == false);  // no rational lift to re-check
}

TEST_CASE("budget exhaustion surfaces as the budget status") {
  Ctx ctx;
  REQUIRE(facto_set_option(ctx.c, "groebner_budget", 1) == FACTO_OK);
  facto_poly* p = nullptr;
  std::string path = std::string(FACTO_FIXTURES_DIR) + "/example52_d4_m2_s0.poly";
  REQUIRE(facto_poly_from_file(ctx.c, path.c_str(), &p) == FACTO_OK);
  Str out;
  CHECK(facto_analyze(ctx.c, p, &out.s) == FACTO_ERR_BUDGET);
  facto_poly_free(p);
}
