#pragma once

#include "polytess/rational.hpp"
#include "polytess/symmetry.hpp"

#include <string>
#include <vector>

namespace polytess {

/// A simplex given by its vertex list. For a full-dimensional simplex
/// (ambient+1 vertices) the orientation is the determinant sign of the edge
/// matrix in construction order; lower-dimensional members of a chain carry
/// orientation +1.
struct OrientedSimplex {
  std::vector<RatVec> vertices;
  int orientation = 1;
};

/// A list of simplices sharing one ambient dimension.
struct SimplexChain {
  std::vector<OrientedSimplex> simplices;
  int ambient = 0;
  std::string label;
};

/// Builds a full-dimensional simplex, computing its orientation from the
/// edge-matrix determinant. Throws if the vertices are affinely dependent.
OrientedSimplex make_oriented_simplex(std::vector<RatVec> vertices);

/// The d! order simplices of the unit d-cube: for each permutation pi, the
/// walk 0, e_{pi(1)}, e_{pi(1)}+e_{pi(2)}, ... Permutations are enumerated in
/// lexicographic order. Interiors are disjoint and the union is the cube.
SimplexChain kuhn_triangulation(int d);

/// Embeds a chain one dimension up, fixing the new last coordinate to 1.
SimplexChain lift_to_ceiling(const SimplexChain& base);

/// Adjoins the apex to every simplex of the base chain. The base must lie in
/// the hyperplane x_d = 1 and the apex outside it; a full-dimensional result
/// that is degenerate throws.
SimplexChain cone_chain(const SimplexChain& base, const RatVec& apex);

/// The n! simplices tiling the pyramid over the ceiling cube: the lifted
/// Kuhn triangulation of the base, coned to the origin.
SimplexChain pyramid_chain(int n);

/// The d! simplices tiling the unit d-cube: the d rotation images of the
/// coned pyramid chain.
SimplexChain cube_chain(int d);

/// Exact total volume: sum of |det(edge matrix)| / d! over the simplices.
/// Every simplex must have ambient+1 vertices.
Rational chain_volume(const SimplexChain& chain);

/// Vertex-wise image of the chain under rotation^times, with orientations
/// recomputed from the transformed vertices.
SimplexChain apply_to_chain(const CyclicRotation& r, const SimplexChain& chain,
                            int times);

}  // namespace polytess
