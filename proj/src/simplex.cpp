#include <cmath>
#include <limits>
#include <vector>

#include "wl1/solvers.hpp"

namespace wl1::detail {

namespace {

constexpr double kPivotTol = 1e-9;

// Tableau-based simplex on min c.x, Ax = b (b >= 0), x >= 0, starting from
// the given basis. Bland's rule, so it terminates on degenerate problems.
// `costs` has one entry per column of T (excluding the rhs column).
struct Tableau {
  Matrix T;                 // rows x (cols + 1); last column is the rhs
  std::vector<int> basis;   // basic column per row
  int rows;
  int cols;

  double rhs(int r) const { return T(r, cols); }

  void pivot(int pr, int pc) {
    T.row(pr) /= T(pr, pc);
    for (int r = 0; r <= rows - 1; ++r) {
      if (r == pr) continue;
      const double f = T(r, pc);
      if (f != 0.0) T.row(r) -= f * T.row(pr);
    }
    basis[static_cast<std::size_t>(pr)] = pc;
  }
};

// Runs simplex with reduced costs derived from `cost` (length cols). The
// columns in `blocked` may never enter the basis. Returns false when the
// objective is unbounded below.
bool run_simplex(Tableau& tab, const Vector& cost, const std::vector<bool>& blocked) {
  for (;;) {
    // Reduced costs: r_j = c_j - c_B . B^{-1} A_j. The tableau already holds
    // B^{-1} A, so accumulate against the basic costs.
    int enter = -1;
    for (int j = 0; j < tab.cols; ++j) {
      if (blocked[static_cast<std::size_t>(j)]) continue;
      double red = cost[j];
      for (int r = 0; r < tab.rows; ++r) red -= cost[tab.basis[static_cast<std::size_t>(r)]] * tab.T(r, j);
      if (red < -kPivotTol) {
        enter = j;  // Bland: smallest eligible index
        break;
      }
    }
    if (enter < 0) return true;
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < tab.rows; ++r) {
      const double a = tab.T(r, enter);
      if (a > kPivotTol) {
        const double ratio = tab.rhs(r) / a;
        if (ratio < best_ratio - 1e-12 ||
            (std::abs(ratio - best_ratio) <= 1e-12 &&
             (leave < 0 || tab.basis[static_cast<std::size_t>(r)] <
                               tab.basis[static_cast<std::size_t>(leave)]))) {
          best_ratio = ratio;
          leave = r;
        }
      }
    }
    if (leave < 0) return false;  // unbounded
    tab.pivot(leave, enter);
  }
}

}  // namespace

LpResult solve_lp_inequality(const Matrix& A, const Vector& b, const Vector& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (b.size() != m || c.size() != n)
    throw std::invalid_argument("solve_lp_inequality: dimension mismatch");

  // Standard form with slacks: [A I] [x; s] = b. Rows with negative b are
  // negated; artificials cover every row so phase 1 starts from an identity
  // basis regardless of slack signs.
  const int cols = n + m + m;  // x, slacks, artificials
  Tableau tab;
  tab.rows = m;
  tab.cols = cols;
  tab.T = Matrix::Zero(m, cols + 1);
  tab.basis.resize(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    const double sign = (b[r] < 0.0) ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) tab.T(r, j) = sign * A(r, j);
    tab.T(r, n + r) = sign;           // slack
    tab.T(r, n + m + r) = 1.0;        // artificial
    tab.T(r, cols) = sign * b[r];
    tab.basis[static_cast<std::size_t>(r)] = n + m + r;
  }

  // Phase 1: minimize the artificial sum.
  Vector phase1 = Vector::Zero(cols);
  for (int j = n + m; j < cols; ++j) phase1[j] = 1.0;
  std::vector<bool> blocked(static_cast<std::size_t>(cols), false);
  if (!run_simplex(tab, phase1, blocked)) return {};  // cannot happen: bounded below by 0

  double art_sum = 0.0;
  for (int r = 0; r < m; ++r)
    if (tab.basis[static_cast<std::size_t>(r)] >= n + m) art_sum += tab.rhs(r);
  LpResult out;
  if (art_sum > 1e-7) {
    out.status = LpResult::Status::kInfeasible;
    return out;
  }

  // Drive any artificial still basic (at zero) out of the basis when a real
  // pivot exists; its row is redundant otherwise and pivoting is impossible,
  // which is harmless since the rhs is zero.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[static_cast<std::size_t>(r)] < n + m) continue;
    for (int j = 0; j < n + m; ++j) {
      if (std::abs(tab.T(r, j)) > kPivotTol) {
        tab.pivot(r, j);
        break;
      }
    }
  }

  // Phase 2 on the real objective; artificials may not re-enter.
  Vector phase2 = Vector::Zero(cols);
  for (int j = 0; j < n; ++j) phase2[j] = c[j];
  for (int j = n + m; j < cols; ++j) blocked[static_cast<std::size_t>(j)] = true;
  if (!run_simplex(tab, phase2, blocked)) {
    out.status = LpResult::Status::kUnbounded;
    return out;
  }

  out.status = LpResult::Status::kOptimal;
  out.x = Vector::Zero(n);
  for (int r = 0; r < m; ++r) {
    const int col = tab.basis[static_cast<std::size_t>(r)];
    if (col < n) out.x[col] = tab.rhs(r);
  }
  out.value = c.dot(out.x);
  return out;
}

}  // namespace wl1::detail
