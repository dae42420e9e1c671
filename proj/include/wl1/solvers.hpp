#pragma once

#include "wl1/model.hpp"
#include "wl1/types.hpp"

namespace wl1 {

struct SolveConfig {
  int max_iterations = 20000;
  double primal_tolerance = 1e-8;
  double dual_tolerance = 1e-8;
  double feasibility_tolerance = 1e-7;
  /// Multiplies the 1/sigma_max(A)-derived step sizes of the splitting
  /// schemes. 1.0 satisfies the convergence condition; smaller is slower but
  /// never unsafe.
  double step_scale = 1.0;
  /// sigma/tau ratio of the primal-dual schemes; tau*sigma*||K||^2 stays
  /// fixed, so any positive value is safe. 0 picks the solver default (1 for
  /// the l2 ball, 3 for the Dantzig constraint, whose dual moves on a
  /// smaller scale).
  double step_ratio = 0.0;
};

enum class SolveStatus { kOptimal, kMaxIterations, kInfeasible };
const char* solve_status_name(SolveStatus s);

struct SolverResult {
  Vector x_hat;
  SolveStatus status = SolveStatus::kMaxIterations;
  double objective = 0.0;
  /// ||A x - y||_2 for the exact and l2 programs, ||A^T(y - A x)||_inf for
  /// the Dantzig program.
  double constraint_residual = 0.0;
  int iterations = 0;
};

/// minimize ||x||_{1,w} subject to A x = y.
/// Douglas-Rachford between the weighted soft-threshold and the projection
/// onto the affine feasible set (pseudo-inverse via a complete orthogonal
/// decomposition, so rank-deficient A is fine). Returns Infeasible when y is
/// not in the column space.
SolverResult solve_weighted_bp(const Matrix& A, const Vector& y, const Vector& w,
                               const SolveConfig& cfg = {});

/// minimize ||x||_{1,w} subject to ||A x - y||_2 <= eta.
/// Primal-dual splitting (Chambolle-Pock) dualizing A; the ball constraint
/// enters through its closed-form projection. eta = 0 delegates to
/// solve_weighted_bp.
SolverResult solve_weighted_bpdn(const Matrix& A, const Vector& y, const Vector& w, double eta,
                                 const SolveConfig& cfg = {});

/// minimize ||x||_{1,w} subject to ||A^T (y - A x)||_inf <= eta.
/// Same scheme dualizing A^T A; the constraint enters through the clamp onto
/// the inf-ball around A^T y.
SolverResult solve_weighted_ds(const Matrix& A, const Vector& y, const Vector& w, double eta,
                               const SolveConfig& cfg = {});

/// Brute-force reference optimum for tiny instances (N <= 14, n <= 8 —
/// budget guarded). Exact and l2 constraints enumerate candidate supports
/// with independent columns (some optimum always lives on one); per support
/// the exact program has a unique feasible point and the l2 program reduces
/// to sign-patterned linear minimization over an ellipsoid, both closed
/// form. The Dantzig program is a linear program and is solved by a dense
/// two-phase simplex. Independent of the iterative solvers above by
/// construction; this is the test oracle.
SolverResult oracle_weighted_min(const Matrix& A, const Vector& y, const Vector& w, NoiseKind kind,
                                 double eta);

/// One optimality-cone check for h = x_hat - x:
///   ||h_{T0^c}||_1 <= omega ||h_{T0}||_1 + (1-omega) ||h_{(T0 ∪ T~) \ (T0 ∩ T~)}||_1
///                     + 2 (omega ||x_{T0^c}||_1 + (1-omega) ||x_{T~^c ∩ T0^c}||_1)
/// which every minimizer of the weighted program satisfies when x itself is
/// feasible. `holds` allows a small relative slack for approximately
/// converged solutions.
struct ConeWitness {
  double lhs = 0.0;
  double h_on_T0 = 0.0;
  double h_on_sym_diff = 0.0;
  double x_tail_T0c = 0.0;
  double x_tail_outside = 0.0;
  double rhs = 0.0;
  bool holds = false;
};
ConeWitness cone_check(const Vector& h, const Vector& x, const IndexSet& T0,
                       const SupportEstimate& estimate, double omega);

namespace detail {

/// min c.x subject to A x <= b, x >= 0; dense two-phase simplex with
/// Bland's rule. Used by the Dantzig-selector oracle.
struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded } status = Status::kInfeasible;
  double value = 0.0;
  Vector x;
};
LpResult solve_lp_inequality(const Matrix& A, const Vector& b, const Vector& c);

}  // namespace detail

}  // namespace wl1
