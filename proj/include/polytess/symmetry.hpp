#pragma once

#include "polytess/constructions.hpp"
#include "polytess/index_set.hpp"
#include "polytess/rational.hpp"

#include <vector>

namespace polytess {

/// The order-d cyclic symmetry of the unit d-cube about its main diagonal.
struct CyclicRotation {
  RatMat matrix;
  int order = 0;
};

/// The coordinate shift (x_1, ..., x_d) -> (x_d, x_1, ..., x_{d-1}), i.e.
/// e_j -> e_{j+1 mod d}. Its d-th power is the identity.
CyclicRotation theta(int d);

/// Elementwise shift of a subset by i, reduced mod ambient into [1, ambient]
/// and re-sorted. Matches the rotation's action on barycenters.
IndexSet shift_subset(const IndexSet& j, int i);

/// Vertex-wise image of p under rotation^times. `times` may be any integer;
/// it is reduced mod the rotation's order. The label gains an `@power`
/// suffix for nonzero powers.
VPolytope apply_to_polytope(const CyclicRotation& r, const VPolytope& p, int times);

/// Determinant sign of rotation^times: -1 exactly when the ambient dimension
/// is even and the power is odd, so orbit images in even dimensions flip
/// orientation at every step.
int orbit_sign(const CyclicRotation& r, int times);

/// One ceiling facet x_axis = 1 of the cube together with its ordered
/// direction frame, listed in the traversal order the rotation transports.
struct FacetDescriptor {
  int axis = 0;
  std::vector<int> frame;

  bool operator==(const FacetDescriptor&) const = default;
};

/// The facets of the d-cube not containing the origin (the hyperplanes
/// x_1 = 1 through x_d = 1), each with its cyclically transported frame:
/// facet x_j = 1 carries directions (j+1, j+2, ..., j-1) taken mod d.
std::vector<FacetDescriptor> link_of_origin(int d);

}  // namespace polytess
