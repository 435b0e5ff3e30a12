#include "polytess/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace polytess {

VPolytope::VPolytope(std::vector<RatVec> verts, int ambient_dim, std::string tag)
    : vertices(std::move(verts)), ambient(ambient_dim), label(std::move(tag)) {
  if (ambient < 0) throw std::invalid_argument("VPolytope: negative ambient dimension");
  for (const RatVec& v : vertices) {
    if (v.size() != ambient) {
      throw std::invalid_argument("VPolytope: vertex dimension mismatch");
    }
  }
  std::vector<RatVec> sorted = vertices;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw std::invalid_argument("VPolytope: duplicate vertex");
    }
  }
}

bool VPolytope::same_vertex_set(const VPolytope& other) const {
  if (ambient != other.ambient || vertices.size() != other.vertices.size()) return false;
  std::vector<RatVec> a = vertices;
  std::vector<RatVec> b = other.vertices;
  std::sort(a.begin(), a.end(), lex_less);
  std::sort(b.begin(), b.end(), lex_less);
  return a == b;
}

RatVec subset_vertex(const IndexSet& j) {
  RatVec v = RatVec::Zero(j.ambient());
  for (int member : j) v(member - 1) = 1;
  return v;
}

VPolytope cube(int d) {
  if (d < 1) throw std::invalid_argument("cube: dimension must be >= 1");
  std::vector<RatVec> verts;
  verts.reserve(size_t{1} << d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    verts.push_back(subset_vertex(IndexSet::from_mask(d, mask)));
  }
  return VPolytope(std::move(verts), d, "cube");
}

VPolytope pyramid(int n) {
  if (n < 0) throw std::invalid_argument("pyramid: n must be >= 0");
  const int m = n + 1;
  std::vector<RatVec> verts;
  verts.reserve((size_t{1} << n) + 1);
  // Ceiling vertices e_{J u {n+1}} for J over {1..n}, then the origin last.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const std::uint64_t ceiling_mask = mask | (std::uint64_t{1} << n);
    verts.push_back(subset_vertex(IndexSet::from_mask(m, ceiling_mask)));
  }
  verts.push_back(RatVec::Zero(m));
  return VPolytope(std::move(verts), m, "pyramid");
}

VPolytope simplex(int n) {
  if (n < 0) throw std::invalid_argument("simplex: n must be >= 0");
  const int m = n + 1;
  std::vector<RatVec> verts;
  verts.reserve(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) {
    verts.push_back(subset_vertex(IndexSet(m, {i})));
  }
  return VPolytope(std::move(verts), m, "simplex");
}

LabeledPoint barycenter(const IndexSet& j) {
  if (j.is_empty()) throw std::invalid_argument("barycenter: empty index set");
  RatVec p = RatVec::Zero(j.ambient());
  const Rational weight(1, j.size());
  for (int member : j) p(member - 1) = weight;
  return LabeledPoint{std::move(p), j};
}

VPolytope face_simplex(const IndexSet& j) {
  if (j.is_empty()) throw std::invalid_argument("face_simplex: empty index set");
  std::vector<RatVec> verts;
  verts.reserve(static_cast<size_t>(j.size()));
  for (int member : j) {
    verts.push_back(subset_vertex(IndexSet(j.ambient(), {member})));
  }
  return VPolytope(std::move(verts), j.ambient(), "face-simplex");
}

LabeledPoint edge_simplex_intersection(const IndexSet& j) {
  const int m = j.ambient();
  if (j.contains(m)) {
    throw std::invalid_argument(
        "edge_simplex_intersection: subset must avoid the apex index n+1");
  }
  if (j.is_empty()) {
    throw std::invalid_argument(
        "edge_simplex_intersection: empty subset is the apex ray");
  }
  // The pyramid edge t * e_{J u {n+1}} meets the face at t = 1/(k+1).
  const IndexSet adjoined = j.with(m);
  const Rational t(1, j.size() + 1);
  RatVec p = subset_vertex(adjoined) * t;
  return LabeledPoint{std::move(p), adjoined};
}

VPolytope cuboid(int i, int n) {
  const int m = n + 1;
  if (i < 1 || i > m) throw std::invalid_argument("cuboid: index out of range");
  std::vector<RatVec> verts;
  verts.reserve(size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (!(mask & (std::uint64_t{1} << (i - 1)))) continue;
    verts.push_back(barycenter(IndexSet::from_mask(m, mask)).coords);
  }
  return VPolytope(std::move(verts), m, "cuboid[" + std::to_string(i) + "]");
}

RatVec main_diagonal_point(const Rational& t, int d) {
  if (t < 0 || t > 1) {
    throw std::invalid_argument("main_diagonal_point: t outside [0, 1]");
  }
  return RatVec::Constant(d, t);
}

}  // namespace polytess
