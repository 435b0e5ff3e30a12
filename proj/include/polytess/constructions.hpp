#pragma once

#include "polytess/index_set.hpp"
#include "polytess/rational.hpp"

#include <string>
#include <vector>

namespace polytess {

/// A polytope in V-representation: its vertex list, ambient dimension, and a
/// label naming the construction it came from. The constructors below only
/// ever produce lists whose members are genuine extreme points; the class
/// itself checks duplicate-freeness.
struct VPolytope {
  std::vector<RatVec> vertices;
  int ambient = 0;
  std::string label;

  VPolytope(std::vector<RatVec> verts, int ambient_dim, std::string tag);

  /// Vertex sets compared regardless of order.
  bool same_vertex_set(const VPolytope& other) const;
};

/// A point remembering which index subset produced it.
struct LabeledPoint {
  RatVec coords;
  IndexSet subset;
};

/// The 0/1 vector with ones exactly at the positions in j.
RatVec subset_vertex(const IndexSet& j);

/// All 2^d vertices of the unit d-cube, in binary-counter order.
VPolytope cube(int d);

/// The cone from the origin over the ceiling cube x_{n+1} = 1, in ambient
/// dimension n+1: 2^n ceiling vertices (binary-counter order) plus the origin
/// last.
VPolytope pyramid(int n);

/// The regular n-simplex spanned by the n+1 standard basis vectors.
VPolytope simplex(int n);

/// The barycenter of the simplex face spanned by {e_j : j in J}: the average
/// of those basis vectors. J must be nonempty.
LabeledPoint barycenter(const IndexSet& j);

/// The face of the standard simplex spanned by {e_j : j in J}. J nonempty.
VPolytope face_simplex(const IndexSet& j);

/// The unique point where the pyramid edge t * e_{J u {n+1}} crosses the
/// simplex face spanned by J u {n+1}; equals the barycenter of that face.
/// J must be a nonempty subset of {1, ..., n} (ambient n+1).
LabeledPoint edge_simplex_intersection(const IndexSet& j);

/// The i-th cuboid tile of the simplex: the hull of all face barycenters
/// whose subset contains i. Exactly 2^n vertices in binary-counter order.
VPolytope cuboid(int i, int n);

/// The point (t, ..., t) on the main diagonal; t must lie in [0, 1].
RatVec main_diagonal_point(const Rational& t, int d);

}  // namespace polytess
