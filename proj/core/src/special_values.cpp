#include "geodint/special_values.hpp"

#include <cmath>

#include "geodint/elementary.hpp"
#include "geodint/elliptic.hpp"
#include "geodint/elliptic_family.hpp"

namespace geodint {

namespace {

/// arctan((|tau|/A) sqrt((A^2-b^2)/(b^2-tau^2))) / (A sqrt(A^2-b^2)),
/// the shared "elliptic-pole" arctan of I_{-1,0} and I_{-1,1}. A > 1 >= b
/// keeps A^2 - b^2 strictly positive for e < 1, so no limit handling needed.
double pole_atan_term(double atau, const FamilyContext& ctx) {
  const double big_a = 1.0 / ctx.e;
  const double b2 = ctx.bp.b * ctx.bp.b;
  const double gap = big_a * big_a - b2;
  const double root = std::sqrt(gap / (b2 - atau * atau));
  return std::atan(atau / big_a * root) / (big_a * std::sqrt(gap));
}

}  // namespace

double i_m32_0(double tau, const FamilyContext& ctx) {
  if (tau == 0.0) return 0.0;
  const double sign = (tau < 0.0) ? -1.0 : 1.0;
  const double atau = std::abs(tau);

  const double big_a = 1.0 / ctx.e;
  const double b2 = ctx.bp.b * ctx.bp.b;
  const Amplitude amp = amplitude(atau, ctx.bp);

  const double pi_val = ellip_pi(amp.xi, amp.n, amp.k);
  const double e_val = ellip_e(amp.xi, amp.k);
  // (tau/A) sqrt((b^2-tau^2)/(A^2-tau^2)) stays well conditioned: both
  // quadratic factors are bounded away from 0 on the admissible tau range.
  const double corner =
      atau / big_a * std::sqrt((b2 - atau * atau) /
                               (big_a * big_a - atau * atau));
  const double gap = big_a * big_a - b2;

  const double e2 = ctx.e * ctx.e;
  const double pref = 1.0 / ((1.0 - e2) * std::sqrt(ctx.bp.prefactor_base));
  return sign * pref * (pi_val - (e_val - corner) / gap);
}

double i_m1_0(double tau, const FamilyContext& ctx) {
  if (tau == 0.0) return 0.0;
  const double sign = (tau < 0.0) ? -1.0 : 1.0;
  const double atau = std::abs(tau);

  const double b2 = ctx.bp.b * ctx.bp.b;
  // First arctan: arctan(sqrt(1-b^2) tau / sqrt(b^2-tau^2)) / sqrt(1-b^2),
  // written through atan_over_root so the c -> 0 (b -> 1) limit is smooth.
  const double lead =
      atan_over_root(1.0 - b2, atau / std::sqrt(b2 - atau * atau));

  const double e2 = ctx.e * ctx.e;
  const double pref = 1.0 / ((1.0 - e2) * std::sqrt(ctx.bp.prefactor_base));
  return sign * pref * (lead - pole_atan_term(atau, ctx));
}

double i_m1_1(double tau, const FamilyContext& ctx) {
  if (tau == 0.0) return 0.0;
  const double sign = (tau < 0.0) ? -1.0 : 1.0;
  const double atau = std::abs(tau);

  const double b2 = ctx.bp.b * ctx.bp.b;
  const double lead = atau / (b2 * std::sqrt(b2 - atau * atau));

  const double e2 = ctx.e * ctx.e;
  const double base = ctx.bp.prefactor_base;
  const double pref = 1.0 / ((1.0 - b2 * e2) * base * std::sqrt(base));
  return sign * pref * (lead - pole_atan_term(atau, ctx));
}

}  // namespace geodint
