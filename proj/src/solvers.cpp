#include "wl1/solvers.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <limits>

#include "wl1/linalg.hpp"
#include "wl1/rip.hpp"

namespace wl1 {

namespace {

constexpr Index kOracleBudgetN = 14;
constexpr Index kOracleBudgetRows = 8;

void validate_instance(const Matrix& A, const Vector& y, const Vector& w) {
  if (A.rows() == 0 || A.cols() == 0) throw std::invalid_argument("solver: empty matrix");
  if (y.size() != A.rows()) throw std::invalid_argument("solver: y length must equal A rows");
  if (w.size() != A.cols()) throw std::invalid_argument("solver: w length must equal A columns");
  if (!all_finite(A) || !all_finite(y) || !all_finite(w))
    throw std::invalid_argument("solver: non-finite input");
  if ((w.array() < 0.0).any() || (w.array() > 1.0).any())
    throw std::invalid_argument("solver: weights must lie in [0, 1]");
}

Vector shrink(const Vector& v, const Vector& thresholds) {
  Vector out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    const double t = thresholds[i];
    const double a = std::abs(v[i]) - t;
    out[i] = (a > 0.0) ? (v[i] > 0.0 ? a : -a) : 0.0;
  }
  return out;
}

double ds_residual(const Matrix& A, const Vector& y, const Vector& x) {
  return (A.transpose() * (y - A * x)).lpNorm<Eigen::Infinity>();
}

}  // namespace

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kMaxIterations: return "max-iterations";
    case SolveStatus::kInfeasible: return "infeasible";
  }
  return "?";
}

SolverResult solve_weighted_bp(const Matrix& A, const Vector& y, const Vector& w,
                               const SolveConfig& cfg) {
  validate_instance(A, y, w);
  const Index N = A.cols();
  const double yscale = 1.0 + y.norm();

  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(A);
  const Vector x_mn = cod.solve(y);
  const double dist = (A * x_mn - y).norm();
  if (dist > cfg.feasibility_tolerance * yscale) {
    SolverResult r;
    r.x_hat = x_mn;
    r.status = SolveStatus::kInfeasible;
    r.objective = weighted_norm(x_mn, w);
    r.constraint_residual = dist;
    return r;
  }

  const double smax = max_singular_value(A);
  const double t = cfg.step_scale / std::max(smax, 1e-12);
  const Vector thresholds = t * w;

  Vector z = Vector::Zero(N);
  Vector xf(N), xg = x_mn;
  bool converged = false;
  int it = 0;
  while (it < cfg.max_iterations) {
    ++it;
    xf = shrink(z, thresholds);
    const Vector v = 2.0 * xf - z;
    xg = v - cod.solve(A * v - y);
    z += xg - xf;
    if ((xf - xg).norm() <= cfg.primal_tolerance * (1.0 + xf.norm())) {
      converged = true;
      break;
    }
  }

  SolverResult r;
  r.x_hat = xg;
  r.iterations = it;
  r.constraint_residual = (A * xg - y).norm();
  r.objective = weighted_norm(xg, w);
  r.status = (converged && r.constraint_residual <= cfg.feasibility_tolerance * yscale)
                 ? SolveStatus::kOptimal
                 : SolveStatus::kMaxIterations;
  return r;
}

SolverResult solve_weighted_bpdn(const Matrix& A, const Vector& y, const Vector& w, double eta,
                                 const SolveConfig& cfg) {
  validate_instance(A, y, w);
  if (!(eta >= 0.0)) throw std::invalid_argument("solve_weighted_bpdn: eta must be >= 0");
  if (eta == 0.0) return solve_weighted_bp(A, y, w, cfg);

  const Index n = A.rows(), N = A.cols();
  const double yscale = 1.0 + y.norm();
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(A);
  const Vector x_mn = cod.solve(y);
  const double dist = (A * x_mn - y).norm();
  if (dist > eta + cfg.feasibility_tolerance * yscale) {
    SolverResult r;
    r.x_hat = x_mn;
    r.status = SolveStatus::kInfeasible;
    r.objective = weighted_norm(x_mn, w);
    r.constraint_residual = dist;
    return r;
  }

  const double smax = max_singular_value(A);
  if (smax <= 1e-14) {
    // A is (numerically) zero: the origin is feasible iff ||y|| <= eta,
    // which the distance check above already decided.
    SolverResult r;
    r.x_hat = Vector::Zero(N);
    r.status = SolveStatus::kOptimal;
    r.objective = 0.0;
    r.constraint_residual = y.norm();
    return r;
  }
  const double ratio = cfg.step_ratio > 0.0 ? cfg.step_ratio : 1.0;
  const double tau = 0.99 * cfg.step_scale / (ratio * smax);
  const double sigma = 0.99 * cfg.step_scale * ratio / smax;
  const Vector thresholds = tau * w;

  Vector x = Vector::Zero(N), p = Vector::Zero(n);
  bool converged = false;
  int it = 0;
  while (it < cfg.max_iterations) {
    ++it;
    const Vector xt = shrink(x - tau * (A.transpose() * p), thresholds);
    const Vector v = p + sigma * (A * (2.0 * xt - x));
    const Vector q = v / sigma;
    const Vector diff = q - y;
    const double dn = diff.norm();
    const Vector proj = (dn <= eta) ? q : Vector(y + (eta / dn) * diff);
    const Vector pt = v - sigma * proj;

    // Fixed-point residuals; zero exactly at a saddle point.
    const double rp = ((x - xt) / tau - A.transpose() * (p - pt)).norm();
    const double rd = ((p - pt) / sigma - A * (x - xt)).norm();

    x = xt;
    p = pt;

    if (rp <= cfg.primal_tolerance * (1.0 + x.norm()) &&
        rd <= cfg.dual_tolerance * (1.0 + p.norm())) {
      converged = true;
      break;
    }
  }

  // The primal iterate can sit a hair outside the ball; pull it back along
  // the segment toward the least-squares anchor, which is strictly inside.
  double res = (A * x - y).norm();
  if (res > eta && eta > dist) {
    const double slack = res - eta;
    const double blend = std::min(1.0, slack / (eta + slack - dist));
    x = (1.0 - blend) * x + blend * x_mn;
    res = (A * x - y).norm();
  }

  SolverResult r;
  r.x_hat = x;
  r.iterations = it;
  r.constraint_residual = res;
  r.objective = weighted_norm(x, w);
  r.status = (converged && res <= eta + cfg.feasibility_tolerance) ? SolveStatus::kOptimal
                                                                   : SolveStatus::kMaxIterations;
  return r;
}

SolverResult solve_weighted_ds(const Matrix& A, const Vector& y, const Vector& w, double eta,
                               const SolveConfig& cfg) {
  validate_instance(A, y, w);
  if (!(eta >= 0.0)) throw std::invalid_argument("solve_weighted_ds: eta must be >= 0");

  const Index N = A.cols();
  const Matrix G = A.transpose() * A;
  const Vector c = A.transpose() * y;

  const double gmax = detail::sym_eig_max(G);  // sigma_max(A)^2
  if (gmax <= 1e-14) {
    SolverResult r;
    r.x_hat = Vector::Zero(N);
    r.status = SolveStatus::kOptimal;
    r.objective = 0.0;
    r.constraint_residual = c.lpNorm<Eigen::Infinity>();
    if (r.constraint_residual > eta + cfg.feasibility_tolerance)
      r.status = SolveStatus::kInfeasible;
    return r;
  }

  const double ratio = cfg.step_ratio > 0.0 ? cfg.step_ratio : 3.0;
  const double tau = 0.99 * cfg.step_scale / (ratio * gmax);
  const double sigma = 0.99 * cfg.step_scale * ratio / gmax;
  const Vector thresholds = tau * w;
  const Vector lo = c.array() - eta;
  const Vector hi = c.array() + eta;

  Vector x = Vector::Zero(N), p = Vector::Zero(N);
  bool converged = false;
  int it = 0;
  while (it < cfg.max_iterations) {
    ++it;
    const Vector xt = shrink(x - tau * (G * p), thresholds);
    const Vector v = p + sigma * (G * (2.0 * xt - x));
    const Vector proj = (v / sigma).cwiseMax(lo).cwiseMin(hi);
    const Vector pt = v - sigma * proj;

    const double rp = ((x - xt) / tau - G * (p - pt)).norm();
    const double rd = ((p - pt) / sigma - G * (x - xt)).norm();

    x = xt;
    p = pt;

    if (rp <= cfg.primal_tolerance * (1.0 + x.norm()) &&
        rd <= cfg.dual_tolerance * (1.0 + p.norm())) {
      converged = true;
      break;
    }
  }

  // The least-squares anchor satisfies A^T(y - A x) = 0 exactly, so a convex
  // blend restores feasibility whenever the iterate overshoots.
  double res = ds_residual(A, y, x);
  if (res > eta && eta > 0.0) {
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(A);
    const Vector x_mn = cod.solve(y);
    const double slack = res - eta;
    const double blend = std::min(1.0, slack / (eta + slack));
    x = (1.0 - blend) * x + blend * x_mn;
    res = ds_residual(A, y, x);
  }

  SolverResult r;
  r.x_hat = x;
  r.iterations = it;
  r.constraint_residual = res;
  r.objective = weighted_norm(x, w);
  r.status = (converged && res <= eta + cfg.feasibility_tolerance) ? SolveStatus::kOptimal
                                                                   : SolveStatus::kMaxIterations;
  return r;
}

namespace {

struct OracleBest {
  double objective = std::numeric_limits<double>::infinity();
  Vector x;
  bool found = false;

  void offer(double obj, const Vector& candidate) {
    if (!found || obj < objective) {
      objective = obj;
      x = candidate;
      found = true;
    }
  }
};

// Candidate supports: every subset of columns with size <= min(n, N) whose
// columns are linearly independent. Some optimum of each constraint kind is
// supported on such a set (moving along a kernel direction of A_S keeps A x
// fixed and the objective is piecewise linear, so a coordinate can always be
// driven to zero).
void for_each_support(Index N, Index max_size, const std::function<void(const IndexSet&)>& fn) {
  IndexSet s;
  for (Index sz = 1; sz <= max_size; ++sz) {
    CombinationEnumerator combos(N, sz);
    while (combos.next(s)) fn(s);
  }
}

Vector scatter(const Vector& xs, const IndexSet& s, Index N) {
  Vector out = Vector::Zero(N);
  for (std::size_t i = 0; i < s.size(); ++i) out[s[i]] = xs[static_cast<Index>(i)];
  return out;
}

}  // namespace

SolverResult oracle_weighted_min(const Matrix& A, const Vector& y, const Vector& w, NoiseKind kind,
                                 double eta) {
  validate_instance(A, y, w);
  const Index n = A.rows(), N = A.cols();
  if (N > kOracleBudgetN || n > kOracleBudgetRows)
    throw budget_error("oracle_weighted_min: instance exceeds the N <= 14, n <= 8 budget");
  if (!(eta >= 0.0)) throw std::invalid_argument("oracle_weighted_min: eta must be >= 0");
  if (kind == NoiseKind::kGaussian) kind = NoiseKind::kL2Ball;

  const double ytol = 1e-9 * (1.0 + y.norm());
  OracleBest best;

  if (kind == NoiseKind::kDantzigBall) {
    const Matrix G = A.transpose() * A;
    const Vector c = A.transpose() * y;
    Matrix lhs(2 * N, 2 * N);
    lhs.block(0, 0, N, N) = G;
    lhs.block(0, N, N, N) = -G;
    lhs.block(N, 0, N, N) = -G;
    lhs.block(N, N, N, N) = G;
    Vector rhs(2 * N);
    rhs.head(N) = Vector::Constant(N, eta) + c;
    rhs.tail(N) = Vector::Constant(N, eta) - c;
    Vector cost(2 * N);
    cost.head(N) = w;
    cost.tail(N) = w;
    const auto lp = detail::solve_lp_inequality(lhs, rhs, cost);
    SolverResult r;
    if (lp.status != detail::LpResult::Status::kOptimal) {
      r.x_hat = Vector::Zero(N);
      r.status = SolveStatus::kInfeasible;
      r.constraint_residual = c.lpNorm<Eigen::Infinity>();
      return r;
    }
    r.x_hat = lp.x.head(N) - lp.x.tail(N);
    r.status = SolveStatus::kOptimal;
    r.objective = weighted_norm(r.x_hat, w);
    r.constraint_residual = ds_residual(A, y, r.x_hat);
    return r;
  }

  // The empty support: x = 0.
  if (kind == NoiseKind::kExact ? (y.norm() <= ytol) : (y.norm() <= eta))
    best.offer(0.0, Vector::Zero(N));

  const Index max_size = std::min(n, N);
  for_each_support(N, max_size, [&](const IndexSet& s) {
    const Index m = static_cast<Index>(s.size());
    Matrix As(n, m);
    for (Index j = 0; j < m; ++j) As.col(j) = A.col(s[static_cast<std::size_t>(j)]);
    const Matrix gramS = As.transpose() * As;
    const auto [lmin, lmax] = detail::sym_eig_extremes(gramS);
    if (lmin <= 1e-12 * std::max(1.0, lmax)) return;  // dependent columns

    Eigen::LLT<Matrix> llt(gramS);
    if (llt.info() != Eigen::Success) return;
    const Vector aty = As.transpose() * y;
    const Vector x_ls = llt.solve(aty);

    if (kind == NoiseKind::kExact) {
      if ((As * x_ls - y).norm() > ytol) return;
      double obj = 0.0;
      for (Index j = 0; j < m; ++j) obj += w[s[static_cast<std::size_t>(j)]] * std::abs(x_ls[j]);
      best.offer(obj, scatter(x_ls, s, N));
      return;
    }

    // l2 ball: per sign pattern, minimize a linear functional over the
    // ellipsoid {x_S : ||A_S x_S - y|| <= eta}; closed form through the Gram
    // factor. Sign-inconsistent minimizers are skipped — the corresponding
    // orthant optimum has a zero coordinate and is found under a smaller
    // support.
    double rls2 = y.squaredNorm() - aty.dot(x_ls);
    rls2 = std::max(rls2, 0.0);
    double R2 = eta * eta - rls2;
    if (R2 < 0.0) {
      if (R2 > -1e-14 * std::max(1.0, eta * eta))
        R2 = 0.0;
      else
        return;  // this support cannot reach the ball
    }
    const double R = std::sqrt(R2);

    Vector cs(m);
    const std::uint64_t patterns = std::uint64_t{1} << static_cast<unsigned>(m);
    for (std::uint64_t bits = 0; bits < patterns; ++bits) {
      bool all_zero_weight = true;
      for (Index j = 0; j < m; ++j) {
        const double wj = w[s[static_cast<std::size_t>(j)]];
        const double sgn = (bits >> static_cast<unsigned>(j)) & 1U ? -1.0 : 1.0;
        cs[j] = wj * sgn;
        if (wj != 0.0) all_zero_weight = false;
      }
      if (all_zero_weight) {
        best.offer(0.0, scatter(x_ls, s, N));
        break;  // every sign pattern gives the same zero objective
      }
      const Vector u = llt.solve(cs);
      const double qf = cs.dot(u);
      if (qf <= 0.0) continue;
      const Vector xs = x_ls - (R / std::sqrt(qf)) * u;
      bool consistent = true;
      for (Index j = 0; j < m && consistent; ++j) {
        const double wj = w[s[static_cast<std::size_t>(j)]];
        if (wj == 0.0) continue;
        const double sgn = (bits >> static_cast<unsigned>(j)) & 1U ? -1.0 : 1.0;
        if (sgn * xs[j] < -1e-11 * std::max(1.0, xs.cwiseAbs().maxCoeff())) consistent = false;
      }
      if (!consistent) continue;
      double obj = 0.0;
      for (Index j = 0; j < m; ++j) obj += w[s[static_cast<std::size_t>(j)]] * std::abs(xs[j]);
      best.offer(obj, scatter(xs, s, N));
    }
  });

  SolverResult r;
  if (!best.found) {
    r.x_hat = Vector::Zero(N);
    r.status = SolveStatus::kInfeasible;
    r.constraint_residual = y.norm();
    return r;
  }
  r.x_hat = best.x;
  r.status = SolveStatus::kOptimal;
  r.objective = best.objective;
  r.constraint_residual = (A * best.x - y).norm();
  return r;
}

ConeWitness cone_check(const Vector& h, const Vector& x, const IndexSet& T0,
                       const SupportEstimate& estimate, double omega) {
  if (h.size() != x.size() || h.size() != estimate.ambient)
    throw std::invalid_argument("cone_check: dimension mismatch");
  if (!(omega >= 0.0 && omega <= 1.0))
    throw std::invalid_argument("cone_check: omega must lie in [0, 1]");
  const Index N = x.size();
  const IndexSet t0c = set_complement(T0, N);
  const IndexSet overlap = set_intersection(T0, estimate.indices);
  const IndexSet sym_diff = set_difference(set_union(T0, estimate.indices), overlap);
  const IndexSet outside = set_intersection(set_complement(estimate.indices, N), t0c);

  ConeWitness wit;
  wit.lhs = l1_norm_on(h, t0c);
  wit.h_on_T0 = l1_norm_on(h, T0);
  wit.h_on_sym_diff = l1_norm_on(h, sym_diff);
  wit.x_tail_T0c = l1_norm_on(x, t0c);
  wit.x_tail_outside = l1_norm_on(x, outside);
  wit.rhs = omega * wit.h_on_T0 + (1.0 - omega) * wit.h_on_sym_diff +
            2.0 * (omega * wit.x_tail_T0c + (1.0 - omega) * wit.x_tail_outside);
  // Slack covers solver outputs that are optimal only to tolerance.
  wit.holds = wit.lhs <= wit.rhs + 1e-7 * (1.0 + wit.lhs + wit.rhs);
  return wit;
}

}  // namespace wl1
