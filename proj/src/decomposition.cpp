#include "polytess/decomposition.hpp"

#include "polytess/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polytess {

namespace {

// Edge matrix (v_1 - v_0, ..., v_k - v_0) as columns.
RatMat edge_matrix(const std::vector<RatVec>& vertices) {
  const Eigen::Index dim = vertices.front().size();
  RatMat m(dim, static_cast<Eigen::Index>(vertices.size()) - 1);
  for (size_t i = 1; i < vertices.size(); ++i) {
    m.col(static_cast<Eigen::Index>(i - 1)) = vertices[i] - vertices[0];
  }
  return m;
}

Rational factorial(int d) {
  Rational f(1);
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

}  // namespace

OrientedSimplex make_oriented_simplex(std::vector<RatVec> vertices) {
  if (vertices.empty()) {
    throw std::invalid_argument("make_oriented_simplex: no vertices");
  }
  const Eigen::Index dim = vertices.front().size();
  int orientation = 1;
  if (static_cast<Eigen::Index>(vertices.size()) == dim + 1) {
    const Rational det = determinant(edge_matrix(vertices));
    if (det == 0) {
      throw std::invalid_argument("make_oriented_simplex: affinely dependent vertices");
    }
    orientation = det > 0 ? 1 : -1;
  }
  return OrientedSimplex{std::move(vertices), orientation};
}

SimplexChain kuhn_triangulation(int d) {
  if (d < 1) throw std::invalid_argument("kuhn_triangulation: dimension must be >= 1");
  std::vector<int> perm(static_cast<size_t>(d));
  std::iota(perm.begin(), perm.end(), 1);
  SimplexChain chain;
  chain.ambient = d;
  chain.label = "kuhn";
  do {
    std::vector<RatVec> verts;
    verts.reserve(static_cast<size_t>(d) + 1);
    RatVec walk = RatVec::Zero(d);
    verts.push_back(walk);
    for (int axis : perm) {
      walk(axis - 1) += 1;
      verts.push_back(walk);
    }
    chain.simplices.push_back(make_oriented_simplex(std::move(verts)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return chain;
}

SimplexChain lift_to_ceiling(const SimplexChain& base) {
  SimplexChain lifted;
  lifted.ambient = base.ambient + 1;
  lifted.label = base.label + "-ceiling";
  lifted.simplices.reserve(base.simplices.size());
  for (const OrientedSimplex& s : base.simplices) {
    std::vector<RatVec> verts;
    verts.reserve(s.vertices.size());
    for (const RatVec& v : s.vertices) {
      RatVec up(base.ambient + 1);
      up.head(base.ambient) = v;
      up(base.ambient) = 1;
      verts.push_back(std::move(up));
    }
    lifted.simplices.push_back(OrientedSimplex{std::move(verts), s.orientation});
  }
  return lifted;
}

SimplexChain cone_chain(const SimplexChain& base, const RatVec& apex) {
  const int d = base.ambient;
  if (apex.size() != d) {
    throw std::invalid_argument("cone_chain: apex dimension mismatch");
  }
  if (apex(d - 1) == 1) {
    throw std::invalid_argument("cone_chain: apex lies in the base hyperplane");
  }
  for (const OrientedSimplex& s : base.simplices) {
    for (const RatVec& v : s.vertices) {
      if (v(d - 1) != 1) {
        throw std::invalid_argument("cone_chain: base not in the hyperplane x_d = 1");
      }
    }
  }
  SimplexChain coned;
  coned.ambient = d;
  coned.label = base.label + "-cone";
  coned.simplices.reserve(base.simplices.size());
  for (const OrientedSimplex& s : base.simplices) {
    std::vector<RatVec> verts = s.vertices;
    verts.push_back(apex);
    coned.simplices.push_back(make_oriented_simplex(std::move(verts)));
  }
  return coned;
}

SimplexChain pyramid_chain(int n) {
  if (n < 0) throw std::invalid_argument("pyramid_chain: n must be >= 0");
  const int m = n + 1;
  SimplexChain base;
  base.ambient = m;
  if (n == 0) {
    // Ceiling of the unit interval: the single point (1).
    RatVec one(1);
    one(0) = 1;
    base.simplices.push_back(OrientedSimplex{{std::move(one)}, 1});
  } else {
    base = lift_to_ceiling(kuhn_triangulation(n));
  }
  SimplexChain chain = cone_chain(base, RatVec::Zero(m));
  chain.label = "pyramid";
  return chain;
}

SimplexChain cube_chain(int d) {
  if (d < 1) throw std::invalid_argument("cube_chain: dimension must be >= 1");
  const SimplexChain pyramid = pyramid_chain(d - 1);
  const CyclicRotation rot = theta(d);
  SimplexChain chain;
  chain.ambient = d;
  chain.label = "cube";
  chain.simplices.reserve(factorial(d).convert_to<size_t>());
  for (int power = 0; power < d; ++power) {
    SimplexChain image = apply_to_chain(rot, pyramid, power);
    for (OrientedSimplex& s : image.simplices) {
      chain.simplices.push_back(std::move(s));
    }
  }
  return chain;
}

Rational chain_volume(const SimplexChain& chain) {
  const int d = chain.ambient;
  Rational total(0);
  for (const OrientedSimplex& s : chain.simplices) {
    if (static_cast<int>(s.vertices.size()) != d + 1) {
      throw std::invalid_argument("chain_volume: simplex is not full-dimensional");
    }
    Rational det = determinant(edge_matrix(s.vertices));
    if (det < 0) det = -det;
    total += det;
  }
  return total / factorial(d);
}

SimplexChain apply_to_chain(const CyclicRotation& r, const SimplexChain& chain,
                            int times) {
  if (r.matrix.cols() != chain.ambient) {
    throw std::invalid_argument("apply_to_chain: dimension mismatch");
  }
  int k = times % r.order;
  if (k < 0) k += r.order;
  RatMat power = RatMat::Identity(chain.ambient, chain.ambient);
  for (int i = 0; i < k; ++i) power = r.matrix * power;

  SimplexChain image;
  image.ambient = chain.ambient;
  image.label = chain.label;
  if (k != 0) image.label += "@" + std::to_string(k);
  image.simplices.reserve(chain.simplices.size());
  for (const OrientedSimplex& s : chain.simplices) {
    std::vector<RatVec> verts;
    verts.reserve(s.vertices.size());
    for (const RatVec& v : s.vertices) verts.push_back(power * v);
    const bool full_dim =
        static_cast<int>(verts.size()) == chain.ambient + 1;
    if (full_dim) {
      image.simplices.push_back(make_oriented_simplex(std::move(verts)));
    } else {
      image.simplices.push_back(OrientedSimplex{std::move(verts), s.orientation});
    }
  }
  return image;
}

}  // namespace polytess
