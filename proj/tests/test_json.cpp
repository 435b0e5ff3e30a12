#include "polytess/json_io.hpp"

#include "polytess/constructions.hpp"
#include "polytess/decomposition.hpp"

#include <doctest.h>

#include <string>

using namespace polytess;
using nlohmann::json;

TEST_CASE("rational wire form") {
  CHECK(rational_json(rat(1, 2)) == json::array({"1", "2"}));
  CHECK(rational_json(rat(-7, 3)) == json::array({"-7", "3"}));
  CHECK(rational_json(rat(0)) == json::array({"0", "1"}));
  CHECK(rational_json(rat(4, -6)) == json::array({"-2", "3"}));

  for (const Rational& r : {rat(1, 2), rat(-355, 113), rat(0), rat(12345, 67),
                            rational_from_strings("123456789012345678901234567890",
                                                  "98765432109876543210987")}) {
    CHECK(rational_from_json(rational_json(r)) == r);
  }

  CHECK_THROWS_AS(rational_from_json(json::object()), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json::array({"1"})), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json::array({"1", "2", "3"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json::array({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json::array({"1", "0"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json::array({"1", "-2"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json::array({"1x", "2"})),
                  std::invalid_argument);
}

TEST_CASE("vector wire form") {
  RatVec v(3);
  v << rat(1, 3), rat(-2), rat(0);
  const json j = vector_json(v);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0] == json::array({"1", "3"}));
  CHECK(vector_from_json(j) == v);

  CHECK(vector_from_json(vector_json(RatVec(0))).size() == 0);
  CHECK_THROWS_AS(vector_from_json(json::object()), std::invalid_argument);
  CHECK_THROWS_AS(vector_from_json(json::array({json::array({"1"})})),
                  std::invalid_argument);
}

TEST_CASE("polytope serialization") {
  const json j = polytope_json(cube(2));
  CHECK(j["label"] == "cube");
  CHECK(j["ambient"] == 2);
  REQUIRE(j["vertices"].size() == 4);
  // Binary counter order: second vertex is e_1.
  CHECK(j["vertices"][1] == json::array({json::array({"1", "1"}),
                                         json::array({"0", "1"})}));
  CHECK(vector_from_json(j["vertices"][2]) == subset_vertex(IndexSet(2, {2})));
}

TEST_CASE("chain serialization") {
  const SimplexChain chain = cube_chain(2);
  const json j = chain_json(chain);
  CHECK(j["label"] == "cube");
  CHECK(j["ambient"] == 2);
  REQUIRE(j["simplices"].size() == 2);
  for (const json& s : j["simplices"]) {
    const int orientation = s["orientation"].get<int>();
    CHECK((orientation == 1 || orientation == -1));
    REQUIRE(s["vertices"].size() == 3);
    for (const json& v : s["vertices"]) {
      CHECK(vector_from_json(v).size() == 2);
    }
  }

  // Keys come out sorted, and the dump is stable.
  const std::string text = j.dump(2);
  CHECK(text.find("\"ambient\"") < text.find("\"label\""));
  CHECK(text.find("\"label\"") < text.find("\"simplices\""));
  CHECK(chain_json(cube_chain(2)).dump(2) == text);
}

TEST_CASE("report serialization") {
  TessellationReport tess;
  tess.dim = 3;
  tess.exact_volume_each = rat(1, 3);
  tess.volume_sum = rat(1);
  tess.sample_count = 10;
  tess.per_region_hits = {4, 3, 3};
  tess.orbit_match = {true, true, false};
  tess.seed = 42;
  const json jt = report_json(tess);
  for (const char* key : {"dim", "exact_volume_each", "volume_sum", "sample_count",
                          "cover_violations", "multi_assignment_count",
                          "per_region_hits", "orbit_match", "seed", "ok"}) {
    CHECK(jt.contains(key));
  }
  CHECK(jt["exact_volume_each"] == json::array({"1", "3"}));
  CHECK(jt["per_region_hits"] == json::array({4, 3, 3}));
  CHECK(jt["orbit_match"][2] == false);
  CHECK(jt["seed"] == 42);
  CHECK(jt["ok"] == false);

  TilingReport tiling;
  tiling.dim = 4;
  tiling.skipped_ties = 2;
  tiling.centroid_in_all = true;
  const json jc = report_json(tiling);
  for (const char* key : {"dim", "sample_count", "skipped_ties", "violations",
                          "centroid_in_all", "ceiling_face_in_region", "seed",
                          "ok"}) {
    CHECK(jc.contains(key));
  }
  CHECK(jc["centroid_in_all"] == true);

  MCEstimate est;
  est.estimate = 0.25;
  est.std_error = 0.001;
  est.samples = 1000;
  est.seed = 7;
  const json je = estimate_json(est);
  CHECK(je["estimate"] == 0.25);
  CHECK(je["stderr"] == 0.001);
  CHECK(je["samples"] == 1000);
  CHECK(je["seed"] == 7);
}
