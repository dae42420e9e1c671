#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wl1 {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<double>;
using Vector = VectorX<double>;
using Index = Eigen::Index;

/// Sorted, duplicate-free set of 0-based column/coordinate indices.
using IndexSet = std::vector<Index>;

/// Thrown when a combinatorial computation would exceed its subset budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical tolerances shared across modules. The acceptance suite reads
// these; do not tighten or loosen them casually.
namespace tol {
inline constexpr double kSymmetryEntrywise = 1e-12;  // symmetric-input check
inline constexpr double kEigenvalueAbs = 1e-10;      // spectral extremes
inline constexpr double kSingularValueAbs = 1e-10;   // max singular value
inline constexpr double kRankSingular = 1e-10;       // full-column-rank cutoff
inline constexpr double kLeastSquaresOrtho = 1e-8;   // residual orthogonality
}  // namespace tol

/// Exact rational arithmetic for support-profile bookkeeping (rho, alpha,
/// beta). Cardinality identities like alpha + beta = 1 must hold exactly,
/// which rules out floating point.
struct Rational {
  long long num = 0;
  long long den = 1;  // always > 0, gcd(|num|, den) == 1

  constexpr Rational() = default;
  Rational(long long n, long long d);
  Rational(long long n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  std::string str() const;
};

/// r * n when the product is an exact integer; throws std::invalid_argument
/// naming `what` otherwise.
long long rational_times_int_exact(const Rational& r, long long n, const char* what);

}  // namespace wl1
