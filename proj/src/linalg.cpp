#include "wl1/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace wl1 {

namespace detail {

std::pair<double, double> sym_eig_extremes(const Matrix& S) {
  const Index n = S.rows();
  if (n == 1) return {S(0, 0), S(0, 0)};
  if (n == 2) {
    const double tr = S(0, 0) + S(1, 1);
    const double det = S(0, 0) * S(1, 1) - S(0, 1) * S(1, 0);
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return {(tr - disc) / 2.0, (tr + disc) / 2.0};
  }
  // The closed-form 3x3 path (computeDirect) can drop to ~1e-8 accuracy on
  // clustered spectra, below the advertised tolerance; stay iterative.
  Eigen::SelfAdjointEigenSolver<Matrix> es(S, Eigen::EigenvaluesOnly);
  return {es.eigenvalues()(0), es.eigenvalues()(n - 1)};
}

double sym_eig_max(const Matrix& S) { return sym_eig_extremes(S).second; }

}  // namespace detail

std::pair<double, double> spectral_extremes_symmetric(const Matrix& M) {
  if (M.rows() == 0 || M.rows() != M.cols())
    throw std::invalid_argument("spectral_extremes_symmetric: matrix must be square and nonempty");
  if (!all_finite(M))
    throw std::invalid_argument("spectral_extremes_symmetric: non-finite entries");
  const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol::kSymmetryEntrywise)
    throw std::invalid_argument("spectral_extremes_symmetric: asymmetry " + std::to_string(asym) +
                                " exceeds tolerance");
  const Matrix S = 0.5 * (M + M.transpose());
  return detail::sym_eig_extremes(S);
}

double max_singular_value(const Matrix& M) {
  if (M.rows() == 0 || M.cols() == 0)
    throw std::invalid_argument("max_singular_value: empty matrix");
  if (!all_finite(M)) throw std::invalid_argument("max_singular_value: non-finite entries");
  Matrix gram;
  if (M.rows() <= M.cols())
    gram.noalias() = M * M.transpose();
  else
    gram.noalias() = M.transpose() * M;
  return std::sqrt(std::max(0.0, detail::sym_eig_max(gram)));
}

Vector solve_least_squares(const Matrix& A, const Vector& y) {
  if (A.rows() != y.size())
    throw std::invalid_argument("solve_least_squares: A has " + std::to_string(A.rows()) +
                                " rows but y has length " + std::to_string(y.size()));
  if (!all_finite(A) || !all_finite(y))
    throw std::invalid_argument("solve_least_squares: non-finite input");
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smin = (A.rows() < A.cols()) ? 0.0 : sv(sv.size() - 1);
  if (smin <= tol::kRankSingular)
    throw std::invalid_argument(
        "solve_least_squares: A is rank-deficient (smallest singular value " +
        std::to_string(smin) + " <= " + std::to_string(tol::kRankSingular) + ")");
  return svd.solve(y);
}

}  // namespace wl1
