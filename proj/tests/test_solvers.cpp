#include <doctest.h>

#include <cmath>

#include "wl1/random.hpp"
#include "wl1/solvers.hpp"

using namespace wl1;

namespace {

Matrix unit_columns(Rng& rng, Index n, Index N) {
  Matrix A = rng.gaussian_matrix(n, N);
  for (Index j = 0; j < N; ++j) A.col(j) /= A.col(j).norm();
  return A;
}

Vector ones_w(Index n) { return Vector::Ones(n); }

}  // namespace

TEST_CASE("lp solver on hand instances") {
  // min -x1 - x2 s.t. x1 + x2 <= 1, x >= 0  ->  value -1 on the segment
  Matrix A(1, 2);
  A << 1, 1;
  Vector b(1);
  b << 1;
  Vector c(2);
  c << -1, -1;
  const auto r = detail::solve_lp_inequality(A, b, c);
  REQUIRE(r.status == detail::LpResult::Status::kOptimal);
  CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-12));

  // infeasible: x1 <= -1 with x1 >= 0
  Matrix A2(1, 1);
  A2 << 1;
  Vector b2(1);
  b2 << -1;
  Vector c2(1);
  c2 << 1;
  CHECK(detail::solve_lp_inequality(A2, b2, c2).status == detail::LpResult::Status::kInfeasible);

  // unbounded: min -x1, no constraint binds
  Matrix A3 = Matrix::Zero(1, 1);
  Vector b3 = Vector::Zero(1);
  Vector c3(1);
  c3 << -1;
  CHECK(detail::solve_lp_inequality(A3, b3, c3).status == detail::LpResult::Status::kUnbounded);

  // negative rhs exercises phase 1: min x1 s.t. -x1 <= -2  ->  x1 = 2
  Matrix A4(1, 1);
  A4 << -1;
  Vector b4(1);
  b4 << -2;
  Vector c4(1);
  c4 << 1;
  const auto r4 = detail::solve_lp_inequality(A4, b4, c4);
  REQUIRE(r4.status == detail::LpResult::Status::kOptimal);
  CHECK(r4.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("lp solver agrees with support enumeration on equality programs") {
  // min w.(p+q) s.t. A(p-q) = y, p,q >= 0 is the exact-constraint program;
  // two independent routes (simplex vs. combinatorial enumeration) must meet.
  Rng rng(77);
  for (int rep = 0; rep < 60; ++rep) {
    const Index n = 2 + static_cast<Index>(rng.below(3));
    const Index N = n + 1 + static_cast<Index>(rng.below(4));
    const Matrix A = unit_columns(rng, n, N);
    Vector x0 = Vector::Zero(N);
    for (const Index i : rng.sample_indices(N, 2)) x0[i] = rng.normal();
    const Vector y = A * x0;
    Vector w = Vector::Ones(N);
    for (const Index i : rng.sample_indices(N, N / 2))
      w[i] = 0.25 * static_cast<double>(rng.below(5));

    Matrix lhs(2 * n, 2 * N);
    lhs.block(0, 0, n, N) = A;
    lhs.block(0, N, n, N) = -A;
    lhs.block(n, 0, n, N) = -A;
    lhs.block(n, N, n, N) = A;
    Vector rhs(2 * n);
    rhs.head(n) = y;
    rhs.tail(n) = -y;
    Vector cost(2 * N);
    cost.head(N) = w;
    cost.tail(N) = w;
    const auto lp = detail::solve_lp_inequality(lhs, rhs, cost);
    REQUIRE(lp.status == detail::LpResult::Status::kOptimal);

    const auto oracle = oracle_weighted_min(A, y, w, NoiseKind::kExact, 0.0);
    REQUIRE(oracle.status == SolveStatus::kOptimal);
    CHECK(std::abs(lp.value - oracle.objective) < 1e-8);
  }
}

TEST_CASE("bp on identity returns y for any weights") {
  Rng rng(1);
  const Matrix I = Matrix::Identity(5, 5);
  const Vector y = rng.normal_vector(5);
  Vector w(5);
  w << 0.0, 0.3, 1.0, 0.7, 0.1;
  const auto r = solve_weighted_bp(I, y, w);
  CHECK(r.status == SolveStatus::kOptimal);
  CHECK((r.x_hat - y).norm() < 1e-7);
}

TEST_CASE("bp finds the sparsest point on the classic 2x3 instance") {
  Matrix A(2, 3);
  A.col(0) << 1, 0;
  A.col(1) << 0, 1;
  A.col(2) << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  Vector x0 = Vector::Zero(3);
  x0[2] = 1.0;
  const Vector y = A * x0;
  const auto r = solve_weighted_bp(A, y, ones_w(3));
  CHECK(r.status == SolveStatus::kOptimal);
  CHECK((r.x_hat - x0).norm() < 1e-6);
  const auto oracle = oracle_weighted_min(A, y, ones_w(3), NoiseKind::kExact, 0.0);
  CHECK(std::abs(r.objective - oracle.objective) < 1e-7);
}

TEST_CASE("bp flags infeasible data") {
  Matrix A(3, 2);
  A << 1, 0, 0, 1, 0, 0;
  Vector y(3);
  y << 1, 1, 1;  // unreachable third coordinate
  CHECK(solve_weighted_bp(A, y, ones_w(2)).status == SolveStatus::kInfeasible);
}

TEST_CASE("bpdn trivia") {
  Rng rng(2);
  const Matrix A = unit_columns(rng, 4, 8);
  const Vector y = rng.normal_vector(4);

  const auto r = solve_weighted_bpdn(A, y, ones_w(8), y.norm() * 1.5);
  CHECK(r.status == SolveStatus::kOptimal);
  CHECK(r.x_hat.norm() == 0.0);
  CHECK(r.iterations <= 2);

  // eta = 0 is the exact program
  Vector x0 = Vector::Zero(8);
  x0[1] = 2.0;
  x0[6] = -1.0;
  const Vector y0 = A * x0;
  const auto exact = solve_weighted_bp(A, y0, ones_w(8));
  const auto zero_ball = solve_weighted_bpdn(A, y0, ones_w(8), 0.0);
  CHECK(std::abs(exact.objective - zero_ball.objective) < 1e-6);
}

TEST_CASE("bpdn respects the ball and relaxation is monotone") {
  Rng rng(3);
  const Matrix A = unit_columns(rng, 5, 9);
  Vector x0 = Vector::Zero(9);
  x0[0] = 1.5;
  x0[4] = -0.5;
  const Vector y = A * x0 + 0.05 * rng.normal_vector(5);

  double prev = 1e300;
  for (const double eta : {0.02, 0.1, 0.3, 0.8}) {
    const auto r = solve_weighted_bpdn(A, y, ones_w(9), eta);
    REQUIRE(r.status == SolveStatus::kOptimal);
    CHECK(r.constraint_residual <= eta + 1e-7);
    CHECK(r.objective <= prev + 1e-9);
    prev = r.objective;
  }
}

TEST_CASE("ds trivia") {
  Rng rng(4);
  const Matrix A = unit_columns(rng, 4, 7);
  const Vector y = rng.normal_vector(4);
  const double big = (A.transpose() * y).lpNorm<Eigen::Infinity>() * 1.1;
  const auto r = solve_weighted_ds(A, y, ones_w(7), big);
  CHECK(r.status == SolveStatus::kOptimal);
  CHECK(r.x_hat.norm() == 0.0);

  const Matrix I = Matrix::Identity(5, 5);
  const Vector yi = rng.normal_vector(5);
  const auto ri = solve_weighted_ds(I, yi, ones_w(5), 0.0);
  CHECK(ri.status == SolveStatus::kOptimal);
  CHECK((ri.x_hat - yi).norm() < 1e-6);
}

TEST_CASE("exact-constraint solution scales with the data") {
  Rng rng(5);
  const Matrix A = unit_columns(rng, 4, 8);
  Vector x0 = Vector::Zero(8);
  x0[2] = 1.0;
  x0[5] = -2.0;
  const Vector y = A * x0;
  Vector w = ones_w(8);
  w[2] = 0.5;
  const auto r1 = solve_weighted_bp(A, y, w);
  const auto r3 = solve_weighted_bp(A, 3.0 * y, w);
  REQUIRE(r1.status == SolveStatus::kOptimal);
  REQUIRE(r3.status == SolveStatus::kOptimal);
  CHECK((r3.x_hat - 3.0 * r1.x_hat).norm() < 1e-5 * (1.0 + r3.x_hat.norm()));
}

TEST_CASE("oracle trivia") {
  Rng rng(6);
  const Matrix I = Matrix::Identity(4, 4);
  const Vector y = rng.normal_vector(4);
  const auto r = oracle_weighted_min(I, y, ones_w(4), NoiseKind::kExact, 0.0);
  CHECK(r.status == SolveStatus::kOptimal);
  CHECK((r.x_hat - y).norm() < 1e-9);

  // zero is feasible whenever the ball radius covers y
  const auto z = oracle_weighted_min(I, y, ones_w(4), NoiseKind::kL2Ball, y.norm() + 0.1);
  CHECK(z.objective == 0.0);
  const Matrix A = unit_columns(rng, 3, 6);
  const Vector y2 = rng.normal_vector(3);
  const double big = (A.transpose() * y2).lpNorm<Eigen::Infinity>() + 0.1;
  CHECK(oracle_weighted_min(A, y2, ones_w(6), NoiseKind::kDantzigBall, big).objective ==
        doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(oracle_weighted_min(Matrix::Identity(16, 16), Vector::Zero(16), ones_w(16),
                                      NoiseKind::kExact, 0.0),
                  budget_error);
}

TEST_CASE("solver matches oracle on random tiny instances of every kind") {
  Rng rng(7);
  SolveConfig cfg;
  cfg.max_iterations = 200000;
  cfg.primal_tolerance = 1e-10;
  cfg.dual_tolerance = 1e-10;
  for (int rep = 0; rep < 25; ++rep) {
    const Index n = 2 + static_cast<Index>(rng.below(4));
    const Index N = n + 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(12 - n)));
    const Matrix A = unit_columns(rng, n, N);
    Vector x0 = Vector::Zero(N);
    for (const Index i : rng.sample_indices(N, std::min<Index>(n - 1, 2) + 1))
      x0[i] = rng.normal();
    Vector w = ones_w(N);
    for (const Index i : rng.sample_indices(N, N / 3)) w[i] = 0.25 * rng.below(4);

    const Vector y = A * x0 + 0.05 * rng.normal_vector(n);

    const Vector y_exact = A * x0;
    const auto bp = solve_weighted_bp(A, y_exact, w, cfg);
    const auto bp_oracle = oracle_weighted_min(A, y_exact, w, NoiseKind::kExact, 0.0);
    REQUIRE(bp.status == SolveStatus::kOptimal);
    CHECK(std::abs(bp.objective - bp_oracle.objective) <= 1e-6);

    const double eta = 0.05 + 0.2 * rng.uniform();
    const auto dn = solve_weighted_bpdn(A, y, w, eta, cfg);
    const auto dn_oracle = oracle_weighted_min(A, y, w, NoiseKind::kL2Ball, eta);
    if (dn.status == SolveStatus::kOptimal)
      CHECK(std::abs(dn.objective - dn_oracle.objective) <= 1e-6);

    const auto ds = solve_weighted_ds(A, y, w, eta, cfg);
    const auto ds_oracle = oracle_weighted_min(A, y, w, NoiseKind::kDantzigBall, eta);
    if (ds.status == SolveStatus::kOptimal)
      CHECK(std::abs(ds.objective - ds_oracle.objective) <= 1e-6);
  }
}

TEST_CASE("zero-cost support recovers exactly when the estimate covers it") {
  Rng rng(8);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix A = unit_columns(rng, 6, 12);
    Vector x0 = Vector::Zero(12);
    const IndexSet supp = rng.sample_indices(12, 2);
    for (const Index i : supp) x0[i] = 1.0 + rng.uniform();
    const auto est = make_support_estimate(supp, 12);
    const Vector w = make_weights(est, 0.0).w;
    const auto r = solve_weighted_bp(A, A * x0, w);
    REQUIRE(r.status == SolveStatus::kOptimal);
    CHECK((r.x_hat - x0).norm() < 1e-6);
  }
}

TEST_CASE("cone check") {
  const IndexSet T0{0, 1};
  const auto est = make_support_estimate({1, 2}, 6);

  Vector x = Vector::Zero(6);
  x[0] = 2.0;
  x[1] = -1.0;
  CHECK(cone_check(Vector::Zero(6), x, T0, est, 0.5).holds);

  // omega = 1: the classical cone condition
  Vector h = Vector::Zero(6);
  h << 1.0, -1.0, 0.5, 0.0, 0.5, 0.0;
  const auto wit = cone_check(h, x, T0, est, 1.0);
  CHECK(wit.rhs == doctest::Approx(wit.h_on_T0 + 2.0 * wit.x_tail_T0c).epsilon(1e-14));
  CHECK(wit.lhs == doctest::Approx(1.0).epsilon(1e-14));

  // solver outputs satisfy it
  Rng rng(9);
  for (int rep = 0; rep < 50; ++rep) {
    const Matrix A = unit_columns(rng, 5, 10);
    Vector x0 = Vector::Zero(10);
    const IndexSet supp = rng.sample_indices(10, 2);
    for (const Index i : supp) x0[i] = rng.normal();
    const IndexSet t0 = best_k_support(x0, 2);
    const auto e = make_estimate(t0, Rational(1, 1), Rational(1, 2), 2, 10, rng.next_u64());
    const double omega = 0.25 * static_cast<double>(rng.below(5));
    const auto wv = make_weights(e, omega);
    const auto r = solve_weighted_bp(A, A * x0, wv.w);
    if (r.status != SolveStatus::kOptimal) continue;
    CHECK(cone_check(r.x_hat - x0, x0, t0, e, omega).holds);
  }
}
