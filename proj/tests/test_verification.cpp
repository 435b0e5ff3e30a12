#include "polytess/constructions.hpp"
#include "polytess/lp.hpp"
#include "polytess/sampling.hpp"
#include "polytess/symmetry.hpp"
#include "polytess/verification.hpp"

#include <doctest.h>

#include <cmath>

using namespace polytess;

namespace {

RatVec point3(const Rational& a, const Rational& b, const Rational& c) {
  RatVec v(3);
  v << a, b, c;
  return v;
}

}  // namespace

TEST_CASE("region membership") {
  const RatVec x = point3(rat(1, 5), rat(7, 10), rat(1, 2));
  CHECK(region_membership(x, Region{2, 3}));
  CHECK(!region_membership(x, Region{1, 3}));
  CHECK(!region_membership(x, Region{3, 3}));

  // Closed regions share their boundary.
  const RatVec tie = point3(rat(1, 2), rat(1, 2), rat(1, 10));
  CHECK(region_membership(tie, Region{1, 3}));
  CHECK(region_membership(tie, Region{2, 3}));
  CHECK(!region_membership(tie, Region{3, 3}));

  // The main diagonal belongs to every region.
  for (int i = 1; i <= 3; ++i) {
    CHECK(region_membership(main_diagonal_point(rat(2, 7), 3), Region{i, 3}));
  }

  // Points outside the cube are in no region.
  CHECK(!region_membership(point3(2, 0, 0), Region{1, 3}));
  CHECK(!region_membership(point3(rat(-1, 2), 0, 0), Region{1, 3}));

  CHECK_THROWS_AS(region_membership(x, Region{4, 3}), std::invalid_argument);
  CHECK_THROWS_AS(region_membership(RatVec::Zero(2), Region{1, 3}),
                  std::invalid_argument);
}

TEST_CASE("region assignment") {
  CHECK(assign_region(point3(rat(1, 10), rat(9, 10), rat(3, 10))) == 2);
  CHECK(assign_region(point3(rat(1, 2), rat(1, 2), rat(1, 5))) == 1);
  CHECK(assign_region(RatVec::Zero(3)) == 1);
  CHECK_THROWS_AS(assign_region(point3(2, 0, 0)), std::invalid_argument);
}

TEST_CASE("region assignment commutes with the rotation off ties") {
  const CyclicRotation r = theta(4);
  for (uint64_t k = 0; k < 300; ++k) {
    const RatVec x = distinct_cube_point(21, k, 4);
    const RatVec rotated = r.matrix * x;
    CHECK(assign_region(rotated) == assign_region(x) % 4 + 1);
  }
}

TEST_CASE("the pyramid is the top region") {
  for (int n = 0; n <= 4; ++n) CHECK(pyramid_equals_region(n));
}

TEST_CASE("exhaustive partition on a coarse grid") {
  // Every grid point of the cube lies in at least one region; points with
  // pairwise distinct coordinates lie in exactly one.
  for (int d = 1; d <= 3; ++d) {
    std::vector<int> idx(static_cast<size_t>(d), 0);
    while (true) {
      RatVec x(d);
      for (int c = 0; c < d; ++c) x(c) = rat(idx[static_cast<size_t>(c)], 5);
      int members = 0;
      for (int i = 1; i <= d; ++i) {
        if (region_membership(x, Region{i, d})) ++members;
      }
      CHECK(members >= 1);
      bool distinct = true;
      for (int a = 0; a < d && distinct; ++a) {
        for (int b = a + 1; b < d; ++b) {
          if (idx[static_cast<size_t>(a)] == idx[static_cast<size_t>(b)]) {
            distinct = false;
            break;
          }
        }
      }
      if (distinct) CHECK(members == 1);
      int c = 0;
      while (c < d && ++idx[static_cast<size_t>(c)] > 5) {
        idx[static_cast<size_t>(c)] = 0;
        ++c;
      }
      if (c == d) break;
    }
  }
}

TEST_CASE("tessellation report, exact part only") {
  const TessellationReport r1 = verify_tessellation(1, 0, 0);
  CHECK(r1.exact_volume_each == rat(1, 2));
  CHECK(r1.volume_sum == 1);
  CHECK(r1.ok);

  const TessellationReport r2 = verify_tessellation(2, 0, 0);
  CHECK(r2.exact_volume_each == rat(1, 3));
  CHECK(r2.volume_sum == 1);
  CHECK(r2.orbit_match == std::vector<bool>{true, true, true});
  CHECK(r2.ok);
}

TEST_CASE("tessellation report with sampling") {
  const TessellationReport r = verify_tessellation(3, 20000, 9);
  CHECK(r.dim == 4);
  CHECK(r.seed == 9);
  CHECK(r.cover_violations == 0);
  CHECK(r.multi_assignment_count == 0);
  CHECK(r.ok);
  long long total = 0;
  for (long long h : r.per_region_hits) total += h;
  CHECK(total == 20000);
  // Hits concentrate around K/(n+1): allow four binomial sigmas.
  const double expect = 20000.0 / 4;
  const double sigma = std::sqrt(20000.0 * 0.25 * 0.75);
  for (long long h : r.per_region_hits) {
    CHECK(std::abs(static_cast<double>(h) - expect) <= 4 * sigma);
  }
}

TEST_CASE("cuboid tiling report") {
  const TilingReport r2 = verify_cuboid_tiling(2, 300, 0);
  CHECK(r2.dim == 3);
  CHECK(r2.violations == 0);
  CHECK(r2.centroid_in_all);
  CHECK(r2.ceiling_face_in_region);
  CHECK(r2.ok);

  const TilingReport r3 = verify_cuboid_tiling(3, 200, 1);
  CHECK(r3.violations == 0);
  CHECK(r3.ok);
}

TEST_CASE("a point with clear maximum lies in exactly its cuboid") {
  const RatVec q = point3(rat(9, 10), rat(1, 20), rat(1, 20));
  CHECK(convex_combination_exists(q, cuboid(1, 2).vertices));
  CHECK(!convex_combination_exists(q, cuboid(2, 2).vertices));
  CHECK(!convex_combination_exists(q, cuboid(3, 2).vertices));

  // The centroid belongs to all three kites.
  const RatVec c = point3(rat(1, 3), rat(1, 3), rat(1, 3));
  for (int i = 1; i <= 3; ++i) {
    CHECK(convex_combination_exists(c, cuboid(i, 2).vertices));
  }
}

TEST_CASE("monte carlo engine") {
  const MCEstimate full = mc_fraction(
      3, 2000, 0, [](const std::vector<uint64_t>&) { return true; });
  CHECK(full.estimate == 1.0);
  CHECK(full.std_error == 0.0);

  const MCEstimate none = mc_fraction(
      3, 2000, 0, [](const std::vector<uint64_t>&) { return false; });
  CHECK(none.estimate == 0.0);

  CHECK_THROWS_AS(mc_volume(0, 3, 100, 0), std::invalid_argument);
  CHECK_THROWS_AS(mc_volume(4, 3, 100, 0), std::invalid_argument);
}

TEST_CASE("fast numerator membership agrees with the rational definition") {
  for (int i = 1; i <= 3; ++i) {
    for (uint64_t k = 0; k < 2000; ++k) {
      const auto nums = cube_point_numerators(31, k, 3);
      const uint64_t top = nums[static_cast<size_t>(i - 1)];
      bool fast = true;
      for (uint64_t v : nums) {
        if (v > top) {
          fast = false;
          break;
        }
      }
      RatVec x(3);
      for (int c = 0; c < 3; ++c) {
        x(c) = numerator_to_rational(nums[static_cast<size_t>(c)]);
      }
      CHECK(fast == region_membership(x, Region{i, 3}));
    }
  }
}

TEST_CASE("monte carlo volume brackets the exact value") {
  const MCEstimate est = mc_volume(3, 3, 100000, 0);
  CHECK(est.samples == 100000);
  CHECK(std::abs(est.estimate - 1.0 / 3) <= 4 * est.std_error);

  const MCEstimate est4 = mc_volume(1, 4, 100000, 5);
  CHECK(std::abs(est4.estimate - 1.0 / 4) <= 4 * est4.std_error);
}
