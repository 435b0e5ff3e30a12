#include "polytess/symmetry.hpp"

#include "polytess/linalg.hpp"

#include <stdexcept>
#include <string>

namespace polytess {

CyclicRotation theta(int d) {
  if (d < 1) throw std::invalid_argument("theta: dimension must be >= 1");
  RatMat m = RatMat::Zero(d, d);
  for (int col = 1; col <= d; ++col) {
    const int row = col % d + 1;  // e_col -> e_{col+1 mod d}
    m(row - 1, col - 1) = 1;
  }
  return CyclicRotation{std::move(m), d};
}

IndexSet shift_subset(const IndexSet& j, int i) {
  const int d = j.ambient();
  std::vector<int> shifted;
  shifted.reserve(static_cast<size_t>(j.size()));
  for (int member : j) {
    int v = (member - 1 + i) % d;
    if (v < 0) v += d;
    shifted.push_back(v + 1);
  }
  return IndexSet(d, std::move(shifted));
}

namespace {

RatMat rotation_power(const CyclicRotation& r, int times) {
  int k = times % r.order;
  if (k < 0) k += r.order;
  RatMat acc = RatMat::Identity(r.matrix.rows(), r.matrix.cols());
  for (int i = 0; i < k; ++i) acc = r.matrix * acc;
  return acc;
}

}  // namespace

VPolytope apply_to_polytope(const CyclicRotation& r, const VPolytope& p, int times) {
  if (r.matrix.cols() != p.ambient) {
    throw std::invalid_argument("apply_to_polytope: dimension mismatch");
  }
  const RatMat power = rotation_power(r, times);
  std::vector<RatVec> verts;
  verts.reserve(p.vertices.size());
  for (const RatVec& v : p.vertices) verts.push_back(power * v);
  std::string label = p.label;
  if (times % r.order != 0) label += "@" + std::to_string(times);
  return VPolytope(std::move(verts), p.ambient, std::move(label));
}

int orbit_sign(const CyclicRotation& r, int times) {
  const Rational det = determinant(r.matrix);
  if (det != 1 && det != -1) {
    throw std::invalid_argument("orbit_sign: matrix is not a signed permutation");
  }
  if (det == 1) return 1;
  return times % 2 == 0 ? 1 : -1;
}

std::vector<FacetDescriptor> link_of_origin(int d) {
  if (d < 1) throw std::invalid_argument("link_of_origin: dimension must be >= 1");
  std::vector<FacetDescriptor> facets;
  facets.reserve(static_cast<size_t>(d));
  for (int axis = 1; axis <= d; ++axis) {
    FacetDescriptor f;
    f.axis = axis;
    f.frame.reserve(static_cast<size_t>(d - 1));
    for (int k = 1; k < d; ++k) {
      f.frame.push_back((axis + k - 1) % d + 1);
    }
    facets.push_back(std::move(f));
  }
  return facets;
}

}  // namespace polytess
