#pragma once

#include <Eigen/Dense>

#include <utility>

#include "wl1/types.hpp"

namespace wl1 {

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

/// Matrix-vector product with explicit shape and finiteness checks.
template <typename DerivedA, typename DerivedX>
Vector matvec(const Eigen::MatrixBase<DerivedA>& A, const Eigen::MatrixBase<DerivedX>& x) {
  if (x.cols() != 1) throw std::invalid_argument("matvec: x must be a column vector");
  if (A.cols() != x.rows())
    throw std::invalid_argument("matvec: dimension mismatch (" + std::to_string(A.cols()) +
                                " columns vs vector of length " + std::to_string(x.rows()) + ")");
  if (!all_finite(A) || !all_finite(x)) throw std::invalid_argument("matvec: non-finite input");
  return A * x;
}

/// Smallest and largest eigenvalue of a symmetric matrix.
/// The input must be square and symmetric to within tol::kSymmetryEntrywise
/// per entry; it is symmetrized before factorization so the result is
/// invariant under roundoff-level asymmetry.
std::pair<double, double> spectral_extremes_symmetric(const Matrix& M);

/// Largest singular value of a (nonempty) rectangular matrix, computed as
/// sqrt(lambda_max) of the Gram matrix on the smaller side.
double max_singular_value(const Matrix& M);

/// Least-squares solution of A x = y for A with full column rank
/// (sigma_min > tol::kRankSingular). Throws std::invalid_argument naming the
/// deficiency otherwise.
Vector solve_least_squares(const Matrix& A, const Vector& y);

namespace detail {
/// (lambda_min, lambda_max) of a small symmetric matrix; closed form for
/// orders 1 and 2, direct 3x3 solver for order 3, tridiagonalization above.
std::pair<double, double> sym_eig_extremes(const Matrix& S);
double sym_eig_max(const Matrix& S);
}  // namespace detail

}  // namespace wl1
