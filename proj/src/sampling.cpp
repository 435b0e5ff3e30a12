#include "polytess/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace polytess {

uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

uint64_t counter_value(uint64_t seed, uint64_t k) {
  return mix64(seed + (k + 1) * 0x9E3779B97F4A7C15ull);
}

uint64_t unit_numerator(uint64_t raw) { return raw >> (64 - kUnitBits); }

Rational numerator_to_rational(uint64_t numerator) {
  Rational r(Integer(numerator), Integer(1) << kUnitBits);
  return r;
}

Rational unit_rational(uint64_t raw) {
  return numerator_to_rational(unit_numerator(raw));
}

std::vector<uint64_t> cube_point_numerators(uint64_t seed, uint64_t index, int d) {
  if (d < 1) throw std::invalid_argument("cube_point_numerators: d must be >= 1");
  const uint64_t sub = counter_value(seed, index);
  std::vector<uint64_t> nums(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) {
    nums[static_cast<size_t>(j)] =
        unit_numerator(counter_value(sub, static_cast<uint64_t>(j)));
  }
  return nums;
}

std::vector<uint64_t> distinct_cube_point_numerators(uint64_t seed, uint64_t index,
                                                     int d) {
  if (d < 1) {
    throw std::invalid_argument("distinct_cube_point_numerators: d must be >= 1");
  }
  const uint64_t sub = counter_value(seed, index);
  std::vector<uint64_t> nums(static_cast<size_t>(d));
  std::vector<uint64_t> sorted;
  // Each attempt consumes its own block of d draws, so retries stay inside the
  // per-sample substream and the result is still a function of (seed, index).
  for (uint64_t attempt = 0;; ++attempt) {
    for (int j = 0; j < d; ++j) {
      nums[static_cast<size_t>(j)] = unit_numerator(
          counter_value(sub, attempt * static_cast<uint64_t>(d) +
                                 static_cast<uint64_t>(j)));
    }
    sorted = nums;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
      return nums;
    }
  }
}

namespace {

RatVec numerators_to_point(const std::vector<uint64_t>& nums) {
  RatVec v(static_cast<Eigen::Index>(nums.size()));
  for (size_t j = 0; j < nums.size(); ++j) {
    v(static_cast<Eigen::Index>(j)) = numerator_to_rational(nums[j]);
  }
  return v;
}

}  // namespace

RatVec cube_point(uint64_t seed, uint64_t index, int d) {
  return numerators_to_point(cube_point_numerators(seed, index, d));
}

RatVec distinct_cube_point(uint64_t seed, uint64_t index, int d) {
  return numerators_to_point(distinct_cube_point_numerators(seed, index, d));
}

RatVec simplex_point(uint64_t seed, uint64_t index, int m) {
  if (m < 1) throw std::invalid_argument("simplex_point: m must be >= 1");
  const uint64_t sub = counter_value(seed, index);
  std::vector<uint64_t> cuts(static_cast<size_t>(m - 1));
  for (int j = 0; j + 1 < m; ++j) {
    cuts[static_cast<size_t>(j)] =
        unit_numerator(counter_value(sub, static_cast<uint64_t>(j)));
  }
  std::sort(cuts.begin(), cuts.end());
  const Integer den = Integer(1) << kUnitBits;
  RatVec v(m);
  uint64_t prev = 0;
  for (int j = 0; j + 1 < m; ++j) {
    v(j) = Rational(Integer(cuts[static_cast<size_t>(j)] - prev), den);
    prev = cuts[static_cast<size_t>(j)];
  }
  v(m - 1) = Rational(den - Integer(prev), den);
  return v;
}

}  // namespace polytess
