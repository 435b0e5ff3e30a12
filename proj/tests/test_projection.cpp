#include "polytess/projection.hpp"
#include "polytess/sampling.hpp"

#include <doctest.h>

#include <cmath>

using namespace polytess;

namespace {

double uniform01(uint64_t seed, uint64_t k) {
  return static_cast<double>(counter_value(seed, k) >> 11) / 9007199254740992.0;
}

}  // namespace

TEST_CASE("roots-of-unity projection") {
  const ProjectionMatrix p4 = projection_roots2d(4);
  REQUIRE(p4.rows() == 2);
  REQUIRE(p4.cols() == 4);
  const double eps = 1e-12;
  CHECK(p4(0, 0) == doctest::Approx(1).epsilon(eps));
  CHECK(p4(1, 0) == doctest::Approx(0).scale(1).epsilon(eps));
  CHECK(p4(0, 1) == doctest::Approx(0).scale(1).epsilon(eps));
  CHECK(p4(1, 1) == doctest::Approx(1).epsilon(eps));
  CHECK(p4(0, 2) == doctest::Approx(-1).epsilon(eps));
  CHECK(p4(1, 3) == doctest::Approx(-1).epsilon(eps));

  const ProjectionMatrix p2 = projection_roots2d(2);
  CHECK(p2(0, 0) == 1.0);
  CHECK(p2(0, 1) == doctest::Approx(-1).epsilon(eps));

  // Roots of unity sum to zero.
  for (int m = 2; m <= 9; ++m) {
    const ProjectionMatrix p = projection_roots2d(m);
    CHECK(std::abs(p.row(0).sum()) < 1e-12);
    CHECK(std::abs(p.row(1).sum()) < 1e-12);
  }

  CHECK_THROWS_AS(projection_roots2d(1), std::invalid_argument);
}

TEST_CASE("octahedral projection is the fixed matrix") {
  const ProjectionMatrix p = projection_octahedral4();
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(p(0, 0) == 0.0);
  CHECK(p(1, 0) == 1.0);
  CHECK(p(0, 1) == h);
  CHECK(p(1, 1) == h);
  CHECK(p(0, 2) == 1.0);
  CHECK(p(1, 2) == 0.0);
  CHECK(p(0, 3) == h);
  CHECK(p(1, 3) == -h);
  // Columns 2 and 4 are orthogonal.
  CHECK(p.col(1).dot(p.col(3)) == doctest::Approx(0).scale(1).epsilon(1e-15));
}

TEST_CASE("three dimensional projections") {
  const ProjectionMatrix p4 = projection_roots3d(4);
  REQUIRE(p4.rows() == 3);
  for (int j = 0; j < 4; ++j) CHECK(p4(2, j) == 0.5);
  CHECK(p4.topRows(2) == projection_roots2d(4));

  const ProjectionMatrix p9 = projection_roots3d(9);
  for (int j = 0; j < 9; ++j) {
    CHECK(p9(2, j) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  }
  for (int m = 2; m <= 8; ++m) {
    CHECK(projection_roots3d(m).row(2).norm() == doctest::Approx(1).epsilon(1e-12));
  }

  const ProjectionMatrix squash = projection_axes3d(5, "squash");
  Eigen::VectorXd v(5);
  v << 1, 2, 3, 4, 5;
  Eigen::Vector3d sq = squash * v;
  CHECK(sq == Eigen::Vector3d(1, 2, 3));

  const ProjectionMatrix fav = projection_axes3d(4, "favorite");
  Eigen::VectorXd w(4);
  w << 1, 2, 3, 4;
  Eigen::Vector3d fw = fav * w;
  CHECK(fw == Eigen::Vector3d(1, 2, 7));

  CHECK(projection_axes3d(3, "squash") == Eigen::MatrixXd::Identity(3, 3));
  CHECK_THROWS_AS(projection_axes3d(2, "squash"), std::invalid_argument);
  CHECK_THROWS_AS(projection_axes3d(4, "odd"), std::invalid_argument);
}

TEST_CASE("plane rotation convention") {
  CHECK(plane_rotation(3, 1, 2, 0.0) == Eigen::MatrixXd::Identity(3, 3));

  const Eigen::MatrixXd pi12 = plane_rotation(2, 1, 2, std::numbers::pi);
  CHECK(pi12(0, 0) == doctest::Approx(-1).epsilon(1e-12));
  CHECK(pi12(1, 1) == doctest::Approx(-1).epsilon(1e-12));
  CHECK(std::abs(pi12(0, 1)) < 1e-12);

  // Quarter turn in the (1,2) plane sends e_1 to (0,-1,0).
  const Eigen::MatrixXd q = plane_rotation(3, 1, 2, std::numbers::pi / 2);
  Eigen::Vector3d e1(1, 0, 0);
  Eigen::Vector3d image = q * e1;
  CHECK(std::abs(image(0)) < 1e-12);
  CHECK(image(1) == doctest::Approx(-1).epsilon(1e-12));
  CHECK(image(2) == 0.0);
  CHECK(q(0, 1) == doctest::Approx(1).epsilon(1e-12));  // (a,b) carries +sin

  CHECK_THROWS_AS(plane_rotation(3, 2, 2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(plane_rotation(3, 3, 1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(plane_rotation(3, 0, 2, 0.1), std::invalid_argument);
}

TEST_CASE("rotation schedule endpoints and intervals") {
  for (int m = 2; m <= 6; ++m) {
    CHECK(rotation_schedule(m, 0.0) == Eigen::MatrixXd::Identity(m, m));
    const Eigen::MatrixXd end = rotation_schedule(m, 1.0);
    CHECK((end - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-9);
  }

  // m = 4, t = 1/12: C = 6 intervals, so this is halfway through interval 1,
  // a half turn in the (1,2) plane.
  const Eigen::MatrixXd r = rotation_schedule(4, 1.0 / 12);
  const Eigen::MatrixXd expected = plane_rotation(4, 1, 2, std::numbers::pi);
  CHECK((r - expected).cwiseAbs().maxCoeff() < 1e-12);

  // Start of interval 2 for m = 3 (C = 3): the (1,3) plane at angle 0.
  const Eigen::MatrixXd r2 = rotation_schedule(3, 1.0 / 3);
  CHECK((r2 - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(rotation_schedule(3, -0.01), std::invalid_argument);
  CHECK_THROWS_AS(rotation_schedule(3, 1.01), std::invalid_argument);
}

TEST_CASE("schedule matrices are orthogonal") {
  for (int i = 0; i < 100; ++i) {
    const double t = uniform01(77, static_cast<uint64_t>(i));
    const int m = 2 + static_cast<int>(counter_value(78, static_cast<uint64_t>(i)) % 5);
    const Eigen::MatrixXd r = rotation_schedule(m, t);
    const Eigen::MatrixXd gram = r.transpose() * r;
    CHECK((gram - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("projections are linear on convex combinations") {
  for (int i = 0; i < 50; ++i) {
    const uint64_t seed = 200 + static_cast<uint64_t>(i);
    const int m = 4;
    Eigen::VectorXd a(m), b(m);
    for (int c = 0; c < m; ++c) {
      a(c) = uniform01(seed, static_cast<uint64_t>(c));
      b(c) = uniform01(seed, static_cast<uint64_t>(c + m));
    }
    const double lambda = uniform01(seed, 2 * m);
    const Eigen::VectorXd mix = lambda * a + (1 - lambda) * b;
    for (ProjectionKind kind : {ProjectionKind::Roots2D, ProjectionKind::Octahedral4,
                                ProjectionKind::Roots3D, ProjectionKind::Axes3DSquash,
                                ProjectionKind::Axes3DFavorite}) {
      const ProjectionMatrix p = make_projection(kind, m);
      const Eigen::VectorXd direct = p * mix;
      const Eigen::VectorXd mixed = lambda * (p * a) + (1 - lambda) * (p * b);
      CHECK((direct - mixed).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("projection dispatch") {
  CHECK(make_projection(ProjectionKind::Roots2D, 5).rows() == 2);
  CHECK(make_projection(ProjectionKind::Roots3D, 5).rows() == 3);
  CHECK(make_projection(ProjectionKind::Octahedral4, 4).cols() == 4);
  CHECK_THROWS_AS(make_projection(ProjectionKind::Octahedral4, 5),
                  std::invalid_argument);
}
