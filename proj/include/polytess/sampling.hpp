#pragma once

#include "polytess/rational.hpp"

#include <cstdint>
#include <vector>

namespace polytess {

// Counter-based generator: every draw is a pure function of (seed, index), so
// sampling loops can be split across workers without shared state and any
// single draw can be reproduced in isolation.
//
// mix64 is the splitmix64 finalizer; counter_value(seed, k) feeds it the k-th
// point of an arithmetic sequence started at seed.
uint64_t mix64(uint64_t z);
uint64_t counter_value(uint64_t seed, uint64_t k);

// Uniform draws on [0,1) are rationals numerator / 2^53 with the numerator the
// top 53 bits of a counter value. Keeping the numerator form around lets hot
// loops compare coordinates as plain integers; the comparisons agree with the
// Rational ones because every coordinate shares the denominator.
inline constexpr int kUnitBits = 53;

uint64_t unit_numerator(uint64_t raw);
Rational unit_rational(uint64_t raw);
Rational numerator_to_rational(uint64_t numerator);

// Sample `index` of stream `seed`, as d cube coordinates. The distinct variant
// redraws the whole tuple (from the same per-sample substream) until all
// coordinates differ, so ties never reach the caller.
std::vector<uint64_t> cube_point_numerators(uint64_t seed, uint64_t index, int d);
std::vector<uint64_t> distinct_cube_point_numerators(uint64_t seed, uint64_t index,
                                                     int d);
RatVec cube_point(uint64_t seed, uint64_t index, int d);
RatVec distinct_cube_point(uint64_t seed, uint64_t index, int d);

// Uniform point of the standard simplex with m vertices: spacings of m-1
// sorted uniforms. Coordinates are nonnegative rationals summing to exactly 1.
RatVec simplex_point(uint64_t seed, uint64_t index, int m);

}  // namespace polytess
