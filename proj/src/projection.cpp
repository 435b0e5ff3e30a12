#include "polytess/projection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polytess {

ProjectionMatrix projection_roots2d(int m) {
  if (m < 2) throw std::invalid_argument("projection_roots2d: m must be >= 2");
  ProjectionMatrix p(2, m);
  for (int j = 0; j < m; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / m;
    p(0, j) = std::cos(angle);
    p(1, j) = std::sin(angle);
  }
  return p;
}

ProjectionMatrix projection_octahedral4() {
  const double h = 1.0 / std::sqrt(2.0);
  ProjectionMatrix p(2, 4);
  p << 0, h, 1, h,
       1, h, 0, -h;
  return p;
}

ProjectionMatrix projection_roots3d(int m) {
  if (m < 2) throw std::invalid_argument("projection_roots3d: m must be >= 2");
  ProjectionMatrix p(3, m);
  p.topRows(2) = projection_roots2d(m);
  p.row(2).setConstant(1.0 / std::sqrt(static_cast<double>(m)));
  return p;
}

ProjectionMatrix projection_axes3d(int m, const std::string& variant) {
  if (m < 3) throw std::invalid_argument("projection_axes3d: m must be >= 3");
  ProjectionMatrix p = ProjectionMatrix::Zero(3, m);
  p(0, 0) = 1;
  p(1, 1) = 1;
  p(2, 2) = 1;
  if (variant == "favorite") {
    p(2, m - 1) += 1;
  } else if (variant != "squash") {
    throw std::invalid_argument("projection_axes3d: unknown variant " + variant);
  }
  return p;
}

Eigen::MatrixXd plane_rotation(int m, int a, int b, double angle) {
  if (a < 1 || b > m || a >= b) {
    throw std::invalid_argument("plane_rotation: need 1 <= a < b <= m");
  }
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(m, m);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  r(a - 1, a - 1) = c;
  r(b - 1, b - 1) = c;
  r(a - 1, b - 1) = s;
  r(b - 1, a - 1) = -s;
  return r;
}

Eigen::MatrixXd rotation_schedule(int m, double t) {
  if (m < 2) throw std::invalid_argument("rotation_schedule: m must be >= 2");
  if (t < 0.0 || t > 1.0) {
    throw std::invalid_argument("rotation_schedule: t must lie in [0,1]");
  }
  const int count = m * (m - 1) / 2;
  int j = static_cast<int>(std::floor(t * count)) + 1;
  if (j > count) j = count;  // t = 1 closes the last interval
  int a = 1;
  int b = 2;
  for (int step = 1; step < j; ++step) {
    if (b < m) {
      ++b;
    } else {
      ++a;
      b = a + 1;
    }
  }
  const double angle = 2.0 * std::numbers::pi * (count * t - j + 1);
  return plane_rotation(m, a, b, angle);
}

ProjectionMatrix make_projection(ProjectionKind kind, int m) {
  switch (kind) {
    case ProjectionKind::Roots2D:
      return projection_roots2d(m);
    case ProjectionKind::Octahedral4:
      if (m != 4) {
        throw std::invalid_argument("make_projection: octahedral view needs m = 4");
      }
      return projection_octahedral4();
    case ProjectionKind::Roots3D:
      return projection_roots3d(m);
    case ProjectionKind::Axes3DSquash:
      return projection_axes3d(m, "squash");
    case ProjectionKind::Axes3DFavorite:
      return projection_axes3d(m, "favorite");
  }
  throw std::invalid_argument("make_projection: unknown kind");
}

}  // namespace polytess
