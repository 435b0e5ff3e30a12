#include "polytess/lp.hpp"

#include <stdexcept>

namespace polytess {

namespace {

// Phase-1 tableau for  A x = b, x >= 0  with one artificial variable per row.
// Columns: [structural 0..k) | artificial k..k+m) | rhs]. Minimizes the sum
// of artificials; the system is feasible iff the optimum is zero.
class PhaseOneTableau {
 public:
  PhaseOneTableau(const RatMat& a, const RatVec& b)
      : rows_(static_cast<int>(a.rows())),
        structural_(static_cast<int>(a.cols())),
        tableau_(a.rows(), a.cols() + a.rows() + 1),
        basis_(a.rows()),
        objective_(a.cols() + a.rows()) {
    const int m = rows_;
    const int k = structural_;
    tableau_.setZero();
    for (int r = 0; r < m; ++r) {
      const bool flip = b(r) < 0;
      for (int c = 0; c < k; ++c) tableau_(r, c) = flip ? Rational(-a(r, c)) : a(r, c);
      tableau_(r, k + r) = 1;
      tableau_(r, k + m) = flip ? Rational(-b(r)) : b(r);
      basis_[r] = k + r;
    }
    // Reduced costs for min sum(artificials): cost 1 on artificials, 0
    // elsewhere, minus the basic (artificial) rows.
    for (int c = 0; c < k + m; ++c) {
      Rational z(0);
      for (int r = 0; r < m; ++r) z += tableau_(r, c);
      objective_[c] = (c >= k ? Rational(1) : Rational(0)) - z;
    }
  }

  // Runs Bland's rule to optimality and reports whether all artificials
  // were driven to zero.
  bool feasible() {
    while (true) {
      const int entering = pick_entering();
      if (entering < 0) break;
      const int leaving = pick_leaving(entering);
      if (leaving < 0) break;  // unbounded; cannot happen with obj >= 0
      pivot(leaving, entering);
    }
    // The rhs column stays nonnegative, so the artificial residual is zero
    // exactly when every artificial variable is zero.
    Rational residual(0);
    const int rhs = structural_ + rows_;
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] >= structural_) residual += tableau_(r, rhs);
    }
    return residual == 0;
  }

 private:
  int pick_entering() const {
    for (int c = 0; c < structural_ + rows_; ++c) {
      if (objective_[c] < 0) return c;
    }
    return -1;
  }

  int pick_leaving(int entering) const {
    const int rhs = structural_ + rows_;
    int best = -1;
    Rational best_ratio(0);
    for (int r = 0; r < rows_; ++r) {
      if (tableau_(r, entering) <= 0) continue;
      Rational ratio = tableau_(r, rhs) / tableau_(r, entering);
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[best])) {
        best = r;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(int row, int col) {
    const int width = structural_ + rows_ + 1;
    const Rational inv_pivot = Rational(1) / tableau_(row, col);
    for (int c = 0; c < width; ++c) tableau_(row, c) *= inv_pivot;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || tableau_(r, col) == 0) continue;
      const Rational factor = tableau_(r, col);
      for (int c = 0; c < width; ++c) tableau_(r, c) -= factor * tableau_(row, c);
    }
    if (objective_[col] != 0) {
      const Rational factor = objective_[col];
      for (int c = 0; c < width - 1; ++c) objective_[c] -= factor * tableau_(row, c);
    }
    basis_[row] = col;
  }

  int rows_;
  int structural_;
  RatMat tableau_;
  std::vector<int> basis_;
  std::vector<Rational> objective_;
};

}  // namespace

bool convex_combination_exists(const RatVec& q, const std::vector<RatVec>& w) {
  if (w.empty()) return false;
  const Eigen::Index dim = q.size();
  for (const RatVec& p : w) {
    if (p.size() != dim) {
      throw std::invalid_argument("convex_combination_exists: dimension mismatch");
    }
  }
  // Rows: one per coordinate plus the convexity row sum(lambda) = 1.
  RatMat a(dim + 1, static_cast<Eigen::Index>(w.size()));
  RatVec b(dim + 1);
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) a(r, c) = w[static_cast<size_t>(c)](r);
    a(dim, c) = 1;
  }
  for (Eigen::Index r = 0; r < dim; ++r) b(r) = q(r);
  b(dim) = 1;
  return PhaseOneTableau(a, b).feasible();
}

}  // namespace polytess
