#pragma once

#include <Eigen/Dense>

#include <string>

namespace polytess {

// Floating point starts here. Everything upstream stays rational; these maps
// are applied once per frame, at render time.
using ProjectionMatrix = Eigen::MatrixXd;

enum class ProjectionKind {
  Roots2D,         // coordinate axes to the m-th roots of unity
  Octahedral4,     // the fixed 2x4 octahedral view
  Roots3D,         // roots of unity plus a height row
  Axes3DSquash,    // keep the first three coordinates
  Axes3DFavorite,  // first three, with the last folded into the third
};

// Row 1: cos(2*pi*j/m), row 2: sin(2*pi*j/m), j = 0..m-1.
ProjectionMatrix projection_roots2d(int m);

// Exactly [[0, 1/sqrt2, 1, 1/sqrt2], [1, 1/sqrt2, 0, -1/sqrt2]].
ProjectionMatrix projection_octahedral4();

// roots2d rows plus a third row of 1/sqrt(m).
ProjectionMatrix projection_roots3d(int m);

// variant "squash": rows e_1, e_2, e_3; variant "favorite": e_1, e_2, e_3 + e_m.
ProjectionMatrix projection_axes3d(int m, const std::string& variant);

// Identity except (a,a) = (b,b) = cos, (a,b) = sin, (b,a) = -sin. 1 <= a < b <= m.
Eigen::MatrixXd plane_rotation(int m, int a, int b, double angle);

// One full turn in each of the C = m(m-1)/2 coordinate planes, performed one
// after the other as t runs over [0,1]: pairs (1,2),(1,3),...,(m-1,m) in
// lexicographic order, pair j active on [(j-1)/C, j/C) with angle
// 2*pi*(C*t - j + 1); the last interval is closed at t = 1.
Eigen::MatrixXd rotation_schedule(int m, double t);

ProjectionMatrix make_projection(ProjectionKind kind, int m);

}  // namespace polytess
