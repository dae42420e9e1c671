#pragma once

#include <optional>

#include "wl1/model.hpp"
#include "wl1/types.hpp"

namespace wl1 {

/// Scalar inputs of one recovery-guarantee evaluation. rho*k and
/// alpha*rho*k must be integers (they are cardinalities); construction
/// validates this along with 1 <= a <= k and alpha*rho*k <= min(rho*k, k).
struct GuaranteeInputs {
  Index k = 1;
  Index a = 1;
  Index b = 1;
  double omega = 1.0;
  Rational rho{0, 1};
  Rational alpha{1, 1};
  double delta_a = 0.0;
  double theta_ab = 0.0;

  Index est_size = 0;  // rho * k
  Index overlap = 0;   // alpha * rho * k
};

GuaranteeInputs make_guarantee_inputs(Index k, Index a, Index b, double omega, Rational rho,
                                      Rational alpha, double delta_a, double theta_ab);
/// Same, but from the cardinalities |T~| and |T~ ∩ T0| directly.
GuaranteeInputs guarantee_inputs_from_cardinalities(Index k, Index a, Index b, double omega,
                                                    Index est_size, Index overlap, double delta_a,
                                                    double theta_ab);

/// The order parameter
///   s = [[ k - a + omega*k
///          + (1-omega) * sqrt((1+rho-2*alpha*rho)k) * max{sqrt((1+rho-2*alpha*rho)k), sqrt(a)} ]]
/// where [[.]] is the bracket operator (double_bracket). The quantity
/// (1+rho-2*alpha*rho)k is the integer k + |T~| - 2|T~ ∩ T0|, so the inner
/// expression is evaluated from integers; a relative 1e-9 snap guards the
/// bracket against roundoff on integer-valued expressions.
Index compute_s(Index k, Index a, double omega, const Rational& rho, const Rational& alpha);

/// The dimension parameter d = k when omega = 1, else max{k, (1+rho-2*alpha*rho)k}.
Index compute_d(Index k, double omega, const Rational& rho, const Rational& alpha);

/// C^{alpha,omega}_{a,b,k} = max{ s / sqrt(ab), sqrt(s / a) }.
double compute_C_weighted(Index k, Index a, Index b, double omega, const Rational& rho,
                          const Rational& alpha);

/// Unweighted counterpart C_{a,b,k} = max{ (2k-a)/sqrt(ab), sqrt((2k-a)/a) }.
double compute_C_standard(Index k, Index a, Index b);

/// Which clause of the weighted-vs-standard comparison applies.
enum class Prop1Case {
  kOmegaOne,      // omega = 1: programs coincide
  kAlphaHalf,     // alpha = 1/2: constants coincide
  kBAtMostS,      // alpha > 1/2, omega < 1, b <= s
  kBBetween,      // alpha > 1/2, omega < 1, s < b <= 2k-a
  kBLarge,        // alpha > 1/2, omega < 1, b > 2k-a
  kOutsideScope,  // alpha < 1/2 with omega < 1: no comparison is claimed
};
const char* prop1_case_name(Prop1Case c);

/// Everything Theorem-level: the order and dimension parameters, both
/// condition verdicts, and the error-bound constants where defined.
/// D-constants are present iff the weighted condition holds; C-constants iff
/// the standard condition holds. When s = 0 (perfect zero-weighted estimate
/// with a = k) the tail coefficient D1 has no finite definition and stays
/// absent even when the condition holds.
struct GuaranteeReport {
  Index s = 0;
  Index d = 0;
  double c_weighted = 0.0;
  double c_standard = 0.0;
  bool condition_met = false;
  bool condition_met_standard = false;
  std::optional<double> D0, D1, D0_ds, D1_ds;
  std::optional<double> C0, C1, C0_ds, C1_ds;
  Prop1Case prop1_case = Prop1Case::kOutsideScope;

  // Echo of the inputs, for serialization.
  GuaranteeInputs inputs;
};

GuaranteeReport evaluate_guarantee(const GuaranteeInputs& in);

/// Right-hand side of the recovery error bound at noise level eps:
///   D0 * 2*eps + D1 * 2 * (omega*||x_{T0^c}||_1 + (1-omega)*||x_{T~^c ∩ T0^c}||_1)
/// with the DS-flavored constants when kind is kDantzigBall. Throws if the
/// condition was not met, or if the tail is nonzero while D1 is undefined.
double error_bound_rhs(const GuaranteeReport& report, double eps, const Vector& x,
                       const IndexSet& T0, const SupportEstimate& estimate, double omega,
                       NoiseKind kind);

/// Case-by-case comparison of the weighted constants against the standard
/// ones. The strict comparisons of D/C constants are only defined when the
/// corresponding conditions hold for the supplied (delta_a, theta_ab).
struct Prop1Report {
  Prop1Case which = Prop1Case::kOutsideScope;
  Index s = 0;
  Index two_k_minus_a = 0;
  double c_weighted = 0.0;
  double c_standard = 0.0;
  std::optional<bool> d0_smaller;      // D0 < C0 (both defined)
  std::optional<bool> d0_ds_smaller;   // D0' < C0'
  std::optional<bool> d1_smaller;      // D1 < C1 (both defined)
  std::optional<bool> iff_rhs_holds;   // cases (5)/(6): the stated iff inequality
};

Prop1Report proposition1_compare(const GuaranteeInputs& in);

}  // namespace wl1
