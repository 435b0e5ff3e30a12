#pragma once

#include "polytess/rational.hpp"

#include <stdexcept>
#include <utility>

namespace polytess {

/// Checked matrix-vector product. Eigen's operator* asserts on a dimension
/// mismatch; this throws instead so callers can surface the error.
template <typename DerivedM, typename DerivedV>
Vec<typename DerivedM::Scalar> mat_apply(const Eigen::MatrixBase<DerivedM>& m,
                                         const Eigen::MatrixBase<DerivedV>& v) {
  if (m.cols() != v.size()) {
    throw std::invalid_argument("mat_apply: dimension mismatch");
  }
  return m * v;
}

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// performed is exact for integral domains; over rationals the result is the
/// exact determinant with no intermediate blow-up beyond entry size.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant: matrix must be square");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);

  Mat<Scalar> a = m;
  int sign = 1;
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap_row = -1;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (a(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return Scalar(0);
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  return sign < 0 ? Scalar(-det) : det;
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar squared_distance(const Eigen::MatrixBase<DerivedA>& a,
                                           const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("squared_distance: dimension mismatch");
  }
  using Scalar = typename DerivedA::Scalar;
  Scalar acc(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    Scalar d = a(i) - b(i);
    acc += d * d;
  }
  return acc;
}

}  // namespace polytess
