#include <doctest.h>

#include "support/jacobi_oracle.hpp"
#include "wl1/linalg.hpp"
#include "wl1/random.hpp"

using namespace wl1;

TEST_CASE("matvec basics") {
  Matrix I3 = Matrix::Identity(3, 3);
  Vector x(3);
  x << 1, 2, 3;
  CHECK((matvec(I3, x) - x).norm() == 0.0);

  Matrix Z = Matrix::Zero(2, 3);
  CHECK(matvec(Z, x).norm() == 0.0);

  Matrix A(2, 3);
  A << 1, 0, 1, 0, 1, 1;
  Vector ones = Vector::Ones(3);
  Vector expect(2);
  expect << 2, 2;
  CHECK((matvec(A, ones) - expect).norm() == 0.0);

  Vector bad(2);
  bad << 1, 2;
  CHECK_THROWS_AS(matvec(A, bad), std::invalid_argument);
}

TEST_CASE("spectral extremes on fixed matrices") {
  const auto [a, b] = spectral_extremes_symmetric(Matrix::Identity(4, 4));
  CHECK(a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b == doctest::Approx(1.0).epsilon(1e-12));

  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = 0.5;
  D(1, 1) = 2.0;
  const auto [lo, hi] = spectral_extremes_symmetric(D);
  CHECK(lo == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(hi == doctest::Approx(2.0).epsilon(1e-12));

  Matrix ones = Matrix::Ones(2, 2);
  const auto [l0, l1] = spectral_extremes_symmetric(ones);
  CHECK(std::abs(l0 - 0.0) < tol::kEigenvalueAbs);
  CHECK(std::abs(l1 - 2.0) < tol::kEigenvalueAbs);

  Matrix asym(2, 2);
  asym << 1, 1e-6, 0, 1;
  CHECK_THROWS_AS(spectral_extremes_symmetric(asym), std::invalid_argument);
  CHECK_THROWS_AS(spectral_extremes_symmetric(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("spectral extremes match the Jacobi oracle on random symmetric matrices") {
  Rng rng(101);
  for (int rep = 0; rep < 60; ++rep) {
    const Index n = 1 + static_cast<Index>(rng.below(20));
    Matrix G = rng.gaussian_matrix(n, n);
    Matrix S = 0.5 * (G + G.transpose());
    const auto [lo, hi] = spectral_extremes_symmetric(S);
    const auto [jlo, jhi] = testing::jacobi_extremes(S);
    CHECK(std::abs(lo - jlo) < 1e-8);
    CHECK(std::abs(hi - jhi) < 1e-8);
  }
}

TEST_CASE("max singular value") {
  CHECK(max_singular_value(Matrix::Identity(5, 5)) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix M(2, 2);
  M << 0, 3, 0, 0;
  CHECK(max_singular_value(M) == doctest::Approx(3.0).epsilon(1e-12));

  Matrix col(2, 1);
  col << 3, 4;
  CHECK(max_singular_value(col) == doctest::Approx(5.0).epsilon(1e-12));

  CHECK_THROWS_AS(max_singular_value(Matrix(0, 0)), std::invalid_argument);

  Rng rng(55);
  for (int rep = 0; rep < 40; ++rep) {
    const Index r = 1 + static_cast<Index>(rng.below(8));
    const Index c = 1 + static_cast<Index>(rng.below(8));
    Matrix A = rng.gaussian_matrix(r, c);
    CHECK(std::abs(max_singular_value(A) - max_singular_value(A.transpose())) < 1e-10);
  }
}

TEST_CASE("operator norm bounds matvec") {
  Rng rng(7);
  for (int rep = 0; rep < 1000; ++rep) {
    const Index r = 1 + static_cast<Index>(rng.below(6));
    const Index c = 1 + static_cast<Index>(rng.below(6));
    Matrix A = rng.gaussian_matrix(r, c);
    Vector x = rng.normal_vector(c);
    CHECK((A * x).norm() <= max_singular_value(A) * x.norm() + 1e-10);
  }
}

TEST_CASE("least squares") {
  Matrix I3 = Matrix::Identity(3, 3);
  Vector y(3);
  y << 4, 5, 6;
  CHECK((solve_least_squares(I3, y) - y).norm() < 1e-12);

  Matrix col(2, 1);
  col << 1, 1;
  Vector y2(2);
  y2 << 0, 2;
  CHECK(solve_least_squares(col, y2)(0) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix A(3, 2);
  A << 1, 0, 0, 1, 0, 0;
  Vector y3(3);
  y3 << 1, 2, 5;
  const Vector x3 = solve_least_squares(A, y3);
  CHECK(x3(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x3(1) == doctest::Approx(2.0).epsilon(1e-12));

  Matrix rankdef(2, 2);
  rankdef << 1, 1, 1, 1;
  CHECK_THROWS_WITH_AS(solve_least_squares(rankdef, y2), doctest::Contains("rank-deficient"),
                       std::invalid_argument);
}

TEST_CASE("least-squares residual is orthogonal to the column space") {
  Rng rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    const Index r = 4 + static_cast<Index>(rng.below(6));
    const Index c = 1 + static_cast<Index>(rng.below(3));
    Matrix A = rng.gaussian_matrix(r, c);
    Vector y = rng.normal_vector(r);
    const Vector x = solve_least_squares(A, y);
    const Vector g = A.transpose() * (A * x - y);
    CHECK(g.lpNorm<Eigen::Infinity>() < tol::kLeastSquaresOrtho);
  }
}
