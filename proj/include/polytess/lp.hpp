#pragma once

#include "polytess/rational.hpp"

#include <vector>

namespace polytess {

/// Decides exactly whether q is a convex combination of the points in w:
/// whether lambda >= 0 exists with sum(lambda) = 1 and sum(lambda_i w_i) = q.
///
/// Solved as a phase-1 simplex over exact rationals with Bland's
/// smallest-index pivot rule, which rules out cycling, so the decision always
/// terminates. An empty w yields false. Throws std::invalid_argument when the
/// points do not all share q's dimension.
bool convex_combination_exists(const RatVec& q, const std::vector<RatVec>& w);

}  // namespace polytess
