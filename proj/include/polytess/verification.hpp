#pragma once

#include "polytess/rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace polytess {

// The closed region carved out of the unit cube by one coordinate dominating
// the others: Py^i = {x in C : x_j <= x_i for all j}.
struct Region {
  int index;    // i, in [1, ambient]
  int ambient;
};

// True iff x lies in the cube and coordinate `index` is maximal. Points
// outside the cube return false; a dimension mismatch throws.
bool region_membership(const RatVec& x, const Region& r);

// Smallest index attaining the maximum coordinate. Throws if x is outside the
// cube. Turns the closed cover into an honest partition function.
int assign_region(const RatVec& x);

// Checks Py_{n+1} = Py^{n+1} as vertex sets: every pyramid vertex satisfies
// the region inequalities, and every 0/1 vector satisfying them is a pyramid
// vertex. (The region's extreme points are cube vertices: it is the cone from
// the origin over the ceiling facet x_i = 1.)
bool pyramid_equals_region(int n);

struct TessellationReport {
  int dim = 0;                      // n+1
  Rational exact_volume_each;       // common value of the orbit volumes
  Rational volume_sum;
  long long sample_count = 0;
  long long cover_violations = 0;       // sampled points in no region
  long long multi_assignment_count = 0; // distinct-coordinate points in several
  std::vector<long long> per_region_hits;
  std::vector<bool> orbit_match;        // entry i-1: Theta^i(pyramid) = Py^i
  uint64_t seed = 0;
  bool ok = false;
};

TessellationReport verify_tessellation(int n, long long samples, uint64_t seed);

struct TilingReport {
  int dim = 0;                 // n+1
  long long sample_count = 0;
  long long skipped_ties = 0;  // sampled points without a unique maximum
  long long violations = 0;
  bool centroid_in_all = false;          // (1/(n+1),...) in every cuboid
  bool ceiling_face_in_region = false;   // D_n[n+1] vertices satisfy Py^{n+1}
  uint64_t seed = 0;
  bool ok = false;
};

TilingReport verify_cuboid_tiling(int n, long long samples, uint64_t seed);

struct MCEstimate {
  double estimate = 0.0;
  double std_error = 0.0;  // sqrt(p(1-p)/samples)
  long long samples = 0;
  uint64_t seed = 0;
};

// Fraction of uniform cube samples satisfying a predicate over the coordinate
// numerators (denominator 2^53 throughout). The engine behind mc_volume,
// exposed so tests can run it against arbitrary predicates.
MCEstimate mc_fraction(int d, long long samples, uint64_t seed,
                       const std::function<bool(const std::vector<uint64_t>&)>& hit);

// Monte Carlo volume of region i inside the d-cube.
MCEstimate mc_volume(int i, int d, long long samples, uint64_t seed);

}  // namespace polytess
