#include "polytess/verification.hpp"

#include "polytess/constructions.hpp"
#include "polytess/decomposition.hpp"
#include "polytess/lp.hpp"
#include "polytess/sampling.hpp"
#include "polytess/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polytess {

namespace {

bool inside_cube(const RatVec& x) {
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x(j) < 0 || x(j) > 1) return false;
  }
  return true;
}

std::vector<RatVec> sorted_vertices(std::vector<RatVec> verts) {
  std::sort(verts.begin(), verts.end(), lex_less);
  return verts;
}

// Extreme points of Py^i, enumerated as the cube vertices satisfying the
// region inequalities (the region is the cone over the facet x_i = 1, so its
// extreme points are 0/1 vectors).
std::vector<RatVec> region_extreme_points(const Region& r) {
  std::vector<RatVec> points;
  const uint64_t count = uint64_t(1) << r.ambient;
  for (uint64_t mask = 0; mask < count; ++mask) {
    RatVec v = subset_vertex(IndexSet::from_mask(r.ambient, mask));
    if (region_membership(v, r)) points.push_back(std::move(v));
  }
  return points;
}

}  // namespace

bool region_membership(const RatVec& x, const Region& r) {
  if (x.size() != r.ambient) {
    throw std::invalid_argument("region_membership: dimension mismatch");
  }
  if (r.index < 1 || r.index > r.ambient) {
    throw std::invalid_argument("region_membership: region index out of range");
  }
  if (!inside_cube(x)) return false;
  const Rational& top = x(r.index - 1);
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x(j) > top) return false;
  }
  return true;
}

int assign_region(const RatVec& x) {
  if (x.size() < 1) throw std::invalid_argument("assign_region: empty point");
  if (!inside_cube(x)) throw std::invalid_argument("assign_region: point outside cube");
  Eigen::Index best = 0;
  for (Eigen::Index j = 1; j < x.size(); ++j) {
    if (x(j) > x(best)) best = j;
  }
  return static_cast<int>(best) + 1;
}

bool pyramid_equals_region(int n) {
  if (n < 0) throw std::invalid_argument("pyramid_equals_region: n must be >= 0");
  const int m = n + 1;
  const std::vector<RatVec> mine = sorted_vertices(pyramid(n).vertices);
  const std::vector<RatVec> theirs =
      sorted_vertices(region_extreme_points(Region{m, m}));
  return mine == theirs;
}

TessellationReport verify_tessellation(int n, long long samples, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("verify_tessellation: n must be >= 0");
  if (samples < 0) throw std::invalid_argument("verify_tessellation: samples < 0");
  const int m = n + 1;
  TessellationReport report;
  report.dim = m;
  report.seed = seed;
  report.sample_count = samples;
  report.per_region_hits.assign(static_cast<size_t>(m), 0);
  report.orbit_match.assign(static_cast<size_t>(m), false);

  const SimplexChain chain = pyramid_chain(n);
  const CyclicRotation rot = theta(m);
  const Rational expected(1, m);

  bool volumes_ok = true;
  report.volume_sum = 0;
  for (int power = 0; power < m; ++power) {
    const Rational vol = chain_volume(apply_to_chain(rot, chain, power));
    if (power == 0) report.exact_volume_each = vol;
    if (vol != expected) volumes_ok = false;
    report.volume_sum += vol;
  }
  if (report.volume_sum != 1) volumes_ok = false;

  // Theta^p carries the pyramid (region n+1) onto region p for p >= 1 and
  // fixes it at p = 0.
  const VPolytope pyr = pyramid(n);
  for (int power = 0; power < m; ++power) {
    const int region_index = power == 0 ? m : power;
    const VPolytope image = apply_to_polytope(rot, pyr, power);
    const std::vector<RatVec> expected_pts =
        sorted_vertices(region_extreme_points(Region{region_index, m}));
    report.orbit_match[static_cast<size_t>(region_index - 1)] =
        sorted_vertices(image.vertices) == expected_pts;
  }

  // Distinct coordinates make the maximal coordinate unique, so every sample
  // must land in exactly one closed region. Numerator comparisons are the
  // rational comparisons here: all coordinates share the denominator 2^53.
  for (long long k = 0; k < samples; ++k) {
    const std::vector<uint64_t> nums =
        distinct_cube_point_numerators(seed, static_cast<uint64_t>(k), m);
    int member_count = 0;
    int first_member = 0;
    for (int i = 1; i <= m; ++i) {
      const uint64_t top = nums[static_cast<size_t>(i - 1)];
      bool in = true;
      for (int j = 0; j < m; ++j) {
        if (nums[static_cast<size_t>(j)] > top) {
          in = false;
          break;
        }
      }
      if (in) {
        ++member_count;
        if (member_count == 1) first_member = i;
      }
    }
    if (member_count == 0) ++report.cover_violations;
    if (member_count > 1) ++report.multi_assignment_count;
    if (member_count >= 1) {
      ++report.per_region_hits[static_cast<size_t>(first_member - 1)];
    }
  }

  const bool orbits_ok = std::all_of(report.orbit_match.begin(),
                                     report.orbit_match.end(),
                                     [](bool b) { return b; });
  report.ok = volumes_ok && orbits_ok && report.cover_violations == 0 &&
              report.multi_assignment_count == 0;
  return report;
}

TilingReport verify_cuboid_tiling(int n, long long samples, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("verify_cuboid_tiling: n must be >= 0");
  if (samples < 0) throw std::invalid_argument("verify_cuboid_tiling: samples < 0");
  const int m = n + 1;
  TilingReport report;
  report.dim = m;
  report.seed = seed;
  report.sample_count = samples;

  std::vector<std::vector<RatVec>> hulls;
  hulls.reserve(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) hulls.push_back(cuboid(i, n).vertices);

  std::vector<int> all(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) all[static_cast<size_t>(i - 1)] = i;
  const RatVec centroid = barycenter(IndexSet(m, all)).coords;
  report.centroid_in_all = true;
  for (const std::vector<RatVec>& hull : hulls) {
    if (!convex_combination_exists(centroid, hull)) {
      report.centroid_in_all = false;
      break;
    }
  }

  report.ceiling_face_in_region = true;
  for (const RatVec& v : hulls[static_cast<size_t>(m - 1)]) {
    if (!region_membership(v, Region{m, m})) {
      report.ceiling_face_in_region = false;
      break;
    }
  }

  // A simplex point with unique maximal coordinate i must land in D_n[i] and
  // in no other cuboid. Tied maxima sit on tile boundaries; skip them.
  for (long long k = 0; k < samples; ++k) {
    const RatVec u = simplex_point(seed, static_cast<uint64_t>(k), m);
    Eigen::Index best = 0;
    bool unique = true;
    for (Eigen::Index j = 1; j < u.size(); ++j) {
      if (u(j) > u(best)) {
        best = j;
        unique = true;
      } else if (u(j) == u(best)) {
        unique = false;
      }
    }
    if (!unique) {
      ++report.skipped_ties;
      continue;
    }
    bool good = true;
    for (int i = 1; i <= m; ++i) {
      const bool inside = convex_combination_exists(u, hulls[static_cast<size_t>(i - 1)]);
      const bool expected = i == static_cast<int>(best) + 1;
      if (inside != expected) {
        good = false;
        break;
      }
    }
    if (!good) ++report.violations;
  }

  report.ok = report.violations == 0 && report.centroid_in_all &&
              report.ceiling_face_in_region;
  return report;
}

MCEstimate mc_fraction(int d, long long samples, uint64_t seed,
                       const std::function<bool(const std::vector<uint64_t>&)>& hit) {
  if (samples < 1) throw std::invalid_argument("mc_fraction: samples must be >= 1");
  long long count = 0;
  for (long long k = 0; k < samples; ++k) {
    if (hit(cube_point_numerators(seed, static_cast<uint64_t>(k), d))) ++count;
  }
  MCEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.estimate = static_cast<double>(count) / static_cast<double>(samples);
  est.std_error =
      std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
  return est;
}

MCEstimate mc_volume(int i, int d, long long samples, uint64_t seed) {
  if (i < 1 || i > d) throw std::invalid_argument("mc_volume: region index out of range");
  return mc_fraction(d, samples, seed, [i](const std::vector<uint64_t>& nums) {
    const uint64_t top = nums[static_cast<size_t>(i - 1)];
    for (uint64_t v : nums) {
      if (v > top) return false;
    }
    return true;
  });
}

}  // namespace polytess
