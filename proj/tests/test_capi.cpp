#include <doctest.h>

#include <riccati/riccati.h>

#include <cstring>
#include <string>

namespace {

struct CatalogHandle {
  riccati_catalog* c = nullptr;
  CatalogHandle() { riccati_catalog_build(RICCATI_POLICY_STRICT, 0.0, &c); }
  ~CatalogHandle() { riccati_catalog_free(c); }
};

riccati_catalog* shared_catalog() {
  static CatalogHandle h;
  return h.c;
}

} // namespace

TEST_CASE("classification of the first fixture through the C interface") {
  riccati_system* sys = nullptr;
  double params[5] = {0, 0, 0, 3.75, -0.25};
  REQUIRE(riccati_system_from_normal_form("I", params, &sys) == RICCATI_OK);

  double d[4];
  REQUIRE(riccati_system_discriminants(sys, d) == RICCATI_OK);
  CHECK(d[0] == doctest::Approx(1.0));
  CHECK(d[1] == doctest::Approx(16.0));
  CHECK(d[2] == doctest::Approx(1.0));
  CHECK(d[3] == doctest::Approx(0.0));

  riccati_result* res = nullptr;
  REQUIRE(riccati_classify(sys, shared_catalog(), RICCATI_POLICY_STRICT, 0.0,
                           &res) == RICCATI_OK);
  int id = 0;
  REQUIRE(riccati_result_portrait(res, &id) == RICCATI_OK);
  CHECK(id == 1);

  char* text = nullptr;
  REQUIRE(riccati_result_report(res, 0, &text) == RICCATI_OK);
  CHECK(std::string(text).find("portrait: P1") != std::string::npos);
  riccati_string_free(text);

  REQUIRE(riccati_result_report(res, 1, &text) == RICCATI_OK);
  CHECK(std::string(text).find("\"portrait\": \"P1\"") != std::string::npos);
  riccati_string_free(text);

  riccati_result_free(res);
  riccati_system_free(sys);
}

TEST_CASE("raw systems are reduced before classification") {
  // x' = (x-2)(x-5) = x^2 - 7x + 10, y' = y^2 + 1
  double alpha2[3] = {10, -7, 1};
  double beta1[1] = {0};
  double gamma2[1] = {1};
  riccati_system* sys = nullptr;
  REQUIRE(riccati_system_from_raw(alpha2, 3, 1.0, beta1, 1, gamma2, 1,
                                  RICCATI_POLICY_TOLERANT, 1e-9,
                                  &sys) == RICCATI_OK);
  char fam[4];
  REQUIRE(riccati_system_family(sys, fam, sizeof fam) == RICCATI_OK);
  CHECK(std::string(fam) == "I");
  double p[5];
  REQUIRE(riccati_system_params(sys, p) == RICCATI_OK);
  CHECK(p[4] == doctest::Approx(1.0 / 9.0));
  int rev = -1;
  REQUIRE(riccati_system_orientation_reversed(sys, &rev) == RICCATI_OK);
  CHECK(rev == 0);
  riccati_system_free(sys);
}

TEST_CASE("input validation error codes") {
  double alpha2[3] = {0, 1, 1};
  double beta1[1] = {0};
  double zero[1] = {0};
  double gamma2[2] = {-0.25, 3.75};
  riccati_system* sys = nullptr;
  CHECK(riccati_system_from_raw(alpha2, 3, 1.0, beta1, 1, zero, 0,
                                RICCATI_POLICY_TOLERANT, 1e-9,
                                &sys) == RICCATI_E_BERNOULLI);
  CHECK(riccati_system_from_raw(alpha2, 3, 0.0, beta1, 1, gamma2, 2,
                                RICCATI_POLICY_TOLERANT, 1e-9,
                                &sys) == RICCATI_E_LIENARD);
  CHECK(std::strlen(riccati_last_error()) > 0);
}

TEST_CASE("SVG output is deterministic through the C interface") {
  riccati_system* sys = nullptr;
  double params[5] = {0, 0, 0, 3.75, -0.25};
  REQUIRE(riccati_system_from_normal_form("I", params, &sys) == RICCATI_OK);
  char* svg1 = nullptr;
  char* svg2 = nullptr;
  REQUIRE(riccati_render_svg(sys, RICCATI_POLICY_STRICT, 0.0, 800, 4, 0, 0,
                             &svg1) == RICCATI_OK);
  REQUIRE(riccati_render_svg(sys, RICCATI_POLICY_STRICT, 0.0, 800, 4, 0, 0,
                             &svg2) == RICCATI_OK);
  CHECK(std::string(svg1) == std::string(svg2));
  riccati_string_free(svg1);
  riccati_string_free(svg2);
  riccati_system_free(sys);
}

TEST_CASE("the fixture corpus is exposed and complete") {
  int n = riccati_fixture_count();
  CHECK(n == 74);
  int complete = 0;
  for (int i = 0; i < n; ++i) {
    int id = 0, comp = 0;
    char fam[4];
    double p[5];
    REQUIRE(riccati_fixture(i, &id, fam, p, &comp) == RICCATI_OK);
    complete += comp;
  }
  CHECK(complete == 71);
}

TEST_CASE("catalog gaps are reported") {
  int ids[8];
  int gaps = riccati_catalog_gaps(shared_catalog(), ids, 8);
  CHECK(gaps == 0);
}
