#include "wl1/bounds.hpp"

#include <cmath>

namespace wl1 {

namespace {

// Cardinality (1 + rho - 2*alpha*rho) * k = k + |T~| - 2*|T~ ∩ T0|.
// Nonnegative whenever overlap <= min(est_size, k).
Index cone_cardinality(Index k, Index est_size, Index overlap) {
  return k + est_size - 2 * overlap;
}

void validate_profile(Index k, Index est_size, Index overlap, const char* who) {
  if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be positive");
  if (est_size < 0) throw std::invalid_argument(std::string(who) + ": rho*k must be nonnegative");
  if (overlap < 0 || overlap > est_size)
    throw std::invalid_argument(std::string(who) + ": need 0 <= alpha*rho*k <= rho*k");
  if (overlap > k)
    throw std::invalid_argument(std::string(who) +
                                ": overlap alpha*rho*k cannot exceed k (it is a subset of T0)");
}

// Round to the nearest integer when within a relative 1e-9 window. The inner
// expression of s is integer-valued on large parts of the parameter space
// (omega dyadic, cone cardinality >= a) and the bracket must not jump a ulp.
double snap_integer(double v) {
  const double r = std::round(v);
  if (std::abs(v - r) <= 1e-9 * std::max(1.0, std::abs(v))) return r;
  return v;
}

Index s_from_cardinalities(Index k, Index a, double omega, Index est_size, Index overlap) {
  const Index c = cone_cardinality(k, est_size, overlap);
  if (omega == 1.0) return 2 * k - a;
  double cross;
  if (c >= a)
    cross = static_cast<double>(c);
  else
    cross = std::sqrt(static_cast<double>(c) * static_cast<double>(a));
  const double inner = static_cast<double>(k - a) + omega * static_cast<double>(k) +
                       (1.0 - omega) * cross;
  return static_cast<Index>(double_bracket(snap_integer(inner)));
}

double c_of_order(Index s, Index a, Index b) {
  return std::max(static_cast<double>(s) / std::sqrt(static_cast<double>(a) * static_cast<double>(b)),
                  std::sqrt(static_cast<double>(s) / static_cast<double>(a)));
}

double bound_d0(Index d, Index a, double delta, double gap) {
  return std::sqrt(2.0 * (1.0 + delta) * static_cast<double>(d) / static_cast<double>(a)) / gap;
}

double bound_d0_ds(Index d, double gap) {
  return std::sqrt(2.0 * static_cast<double>(d)) / gap;
}

double bound_d1(Index d, Index s, double c, double theta, double gap) {
  return std::sqrt(2.0 * static_cast<double>(d)) * c * theta / (gap * static_cast<double>(s)) +
         1.0 / std::sqrt(static_cast<double>(d));
}

Prop1Case classify(const GuaranteeInputs& in, Index s) {
  if (in.omega == 1.0) return Prop1Case::kOmegaOne;
  if (in.alpha == Rational(1, 2)) return Prop1Case::kAlphaHalf;
  if (in.alpha < Rational(1, 2)) return Prop1Case::kOutsideScope;
  if (in.b <= s) return Prop1Case::kBAtMostS;
  if (in.b <= 2 * in.k - in.a) return Prop1Case::kBBetween;
  return Prop1Case::kBLarge;
}

}  // namespace

const char* prop1_case_name(Prop1Case c) {
  switch (c) {
    case Prop1Case::kOmegaOne: return "omega=1";
    case Prop1Case::kAlphaHalf: return "alpha=1/2";
    case Prop1Case::kBAtMostS: return "b<=s";
    case Prop1Case::kBBetween: return "s<b<=2k-a";
    case Prop1Case::kBLarge: return "b>2k-a";
    case Prop1Case::kOutsideScope: return "outside-scope";
  }
  return "?";
}

GuaranteeInputs make_guarantee_inputs(Index k, Index a, Index b, double omega, Rational rho,
                                      Rational alpha, double delta_a, double theta_ab) {
  GuaranteeInputs in;
  in.k = k;
  in.a = a;
  in.b = b;
  in.omega = omega;
  in.rho = rho;
  in.alpha = alpha;
  in.delta_a = delta_a;
  in.theta_ab = theta_ab;
  if (a < 1 || a > k) throw std::invalid_argument("GuaranteeInputs: need 1 <= a <= k");
  if (b < 1) throw std::invalid_argument("GuaranteeInputs: need b >= 1");
  if (!(omega >= 0.0 && omega <= 1.0))
    throw std::invalid_argument("GuaranteeInputs: omega must lie in [0, 1]");
  if (!(delta_a >= 0.0 && delta_a <= 1.0))
    throw std::invalid_argument("GuaranteeInputs: delta_a must lie in [0, 1]");
  if (!(theta_ab >= 0.0)) throw std::invalid_argument("GuaranteeInputs: theta_ab must be >= 0");
  if (rho < Rational(0, 1) || alpha < Rational(0, 1) || Rational(1, 1) < alpha)
    throw std::invalid_argument("GuaranteeInputs: need rho >= 0 and alpha in [0, 1]");
  in.est_size = static_cast<Index>(rational_times_int_exact(rho, k, "GuaranteeInputs: rho*k"));
  in.overlap = static_cast<Index>(
      rational_times_int_exact(alpha * rho, k, "GuaranteeInputs: alpha*rho*k"));
  validate_profile(k, in.est_size, in.overlap, "GuaranteeInputs");
  return in;
}

GuaranteeInputs guarantee_inputs_from_cardinalities(Index k, Index a, Index b, double omega,
                                                    Index est_size, Index overlap, double delta_a,
                                                    double theta_ab) {
  validate_profile(k, est_size, overlap, "GuaranteeInputs");
  const Rational rho(est_size, k);
  const Rational alpha = (est_size == 0) ? Rational(1, 1) : Rational(overlap, est_size);
  return make_guarantee_inputs(k, a, b, omega, rho, alpha, delta_a, theta_ab);
}

Index compute_s(Index k, Index a, double omega, const Rational& rho, const Rational& alpha) {
  if (a < 1 || a > k) throw std::invalid_argument("compute_s: need 1 <= a <= k");
  if (!(omega >= 0.0 && omega <= 1.0))
    throw std::invalid_argument("compute_s: omega must lie in [0, 1]");
  const Index m = static_cast<Index>(rational_times_int_exact(rho, k, "compute_s: rho*k"));
  const Index j =
      static_cast<Index>(rational_times_int_exact(alpha * rho, k, "compute_s: alpha*rho*k"));
  validate_profile(k, m, j, "compute_s");
  return s_from_cardinalities(k, a, omega, m, j);
}

Index compute_d(Index k, double omega, const Rational& rho, const Rational& alpha) {
  if (k < 1) throw std::invalid_argument("compute_d: k must be positive");
  if (omega == 1.0) return k;
  const Index m = static_cast<Index>(rational_times_int_exact(rho, k, "compute_d: rho*k"));
  const Index j =
      static_cast<Index>(rational_times_int_exact(alpha * rho, k, "compute_d: alpha*rho*k"));
  validate_profile(k, m, j, "compute_d");
  return std::max(k, cone_cardinality(k, m, j));
}

double compute_C_weighted(Index k, Index a, Index b, double omega, const Rational& rho,
                          const Rational& alpha) {
  if (b < 1) throw std::invalid_argument("compute_C_weighted: need b >= 1");
  return c_of_order(compute_s(k, a, omega, rho, alpha), a, b);
}

double compute_C_standard(Index k, Index a, Index b) {
  if (a < 1 || a > k) throw std::invalid_argument("compute_C_standard: need 1 <= a <= k");
  if (b < 1) throw std::invalid_argument("compute_C_standard: need b >= 1");
  return c_of_order(2 * k - a, a, b);
}

GuaranteeReport evaluate_guarantee(const GuaranteeInputs& in) {
  GuaranteeReport rep;
  rep.inputs = in;
  rep.s = s_from_cardinalities(in.k, in.a, in.omega, in.est_size, in.overlap);
  rep.d = (in.omega == 1.0) ? in.k : std::max(in.k, cone_cardinality(in.k, in.est_size, in.overlap));
  rep.c_weighted = c_of_order(rep.s, in.a, in.b);
  rep.c_standard = c_of_order(2 * in.k - in.a, in.a, in.b);
  rep.prop1_case = classify(in, rep.s);

  const double gap_w = 1.0 - in.delta_a - rep.c_weighted * in.theta_ab;
  rep.condition_met = gap_w > 0.0;
  if (rep.condition_met) {
    rep.D0 = bound_d0(rep.d, in.a, in.delta_a, gap_w);
    rep.D0_ds = bound_d0_ds(rep.d, gap_w);
    if (rep.s >= 1) {
      rep.D1 = bound_d1(rep.d, rep.s, rep.c_weighted, in.theta_ab, gap_w);
      rep.D1_ds = rep.D1;
    }
  }

  const double gap_s = 1.0 - in.delta_a - rep.c_standard * in.theta_ab;
  rep.condition_met_standard = gap_s > 0.0;
  if (rep.condition_met_standard) {
    rep.C0 = bound_d0(in.k, in.a, in.delta_a, gap_s);
    rep.C0_ds = bound_d0_ds(in.k, gap_s);
    rep.C1 = bound_d1(in.k, 2 * in.k - in.a, rep.c_standard, in.theta_ab, gap_s);
    rep.C1_ds = rep.C1;
  }
  return rep;
}

double error_bound_rhs(const GuaranteeReport& report, double eps, const Vector& x,
                       const IndexSet& T0, const SupportEstimate& estimate, double omega,
                       NoiseKind kind) {
  if (!report.condition_met)
    throw std::domain_error("error_bound_rhs: no guarantee applies (condition not met)");
  if (!(eps >= 0.0)) throw std::invalid_argument("error_bound_rhs: eps must be nonnegative");
  const IndexSet t0c = set_complement(T0, x.size());
  const IndexSet outside = set_intersection(set_complement(estimate.indices, x.size()), t0c);
  const double tail = omega * l1_norm_on(x, t0c) + (1.0 - omega) * l1_norm_on(x, outside);
  const double head = (kind == NoiseKind::kDantzigBall) ? *report.D0_ds : *report.D0;
  const std::optional<double>& d1 =
      (kind == NoiseKind::kDantzigBall) ? report.D1_ds : report.D1;
  double tail_term = 0.0;
  if (tail > 0.0) {
    if (!d1)
      throw std::domain_error(
          "error_bound_rhs: tail coefficient undefined (s = 0) for a non-sparse signal");
    tail_term = *d1 * 2.0 * tail;
  }
  return head * 2.0 * eps + tail_term;
}

Prop1Report proposition1_compare(const GuaranteeInputs& in) {
  const GuaranteeReport rep = evaluate_guarantee(in);
  Prop1Report out;
  out.which = rep.prop1_case;
  out.s = rep.s;
  out.two_k_minus_a = 2 * in.k - in.a;
  out.c_weighted = rep.c_weighted;
  out.c_standard = rep.c_standard;
  if (rep.D0 && rep.C0) out.d0_smaller = *rep.D0 < *rep.C0;
  if (rep.D0_ds && rep.C0_ds) out.d0_ds_smaller = *rep.D0_ds < *rep.C0_ds;
  if (rep.D1 && rep.C1) out.d1_smaller = *rep.D1 < *rep.C1;

  const double gap_w = 1.0 - in.delta_a - rep.c_weighted * in.theta_ab;
  if (rep.prop1_case == Prop1Case::kBBetween) {
    const double sb = std::sqrt(static_cast<double>(in.b));
    const double ss = std::sqrt(static_cast<double>(rep.s));
    const double rhs = (static_cast<double>(out.two_k_minus_a) - std::sqrt(double(in.b) * double(rep.s))) /
                       (std::sqrt(static_cast<double>(in.a)) * (sb - ss)) * in.theta_ab;
    out.iff_rhs_holds = gap_w < rhs;
  } else if (rep.prop1_case == Prop1Case::kBLarge) {
    const double rhs =
        std::sqrt(static_cast<double>(out.two_k_minus_a) / static_cast<double>(in.a)) * in.theta_ab;
    out.iff_rhs_holds = gap_w < rhs;
  }
  return out;
}

}  // namespace wl1
