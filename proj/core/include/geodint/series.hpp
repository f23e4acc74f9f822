/// @file series.hpp
/// @brief Assembly of the altitude power series: the member dispatcher
///        I_{beta,k}, the order-by-order series I_alpha and S_alpha, and the
///        public longitude / distance / derivative evaluators.
///
/// Composition being evaluated (all lengths scaled by rho_e):
///   Delta_lambda = c [ h I_1 + (1 - e^2) I_{-1/2} ],
///   s            =   h S_0 + h^2 S_{1/2} + (1 - e^2) S_{-3/2}
///                  + h (1 - e^2) S_{-1},
/// where
///   I_alpha = sum_s (-h)^s sum_{k=0}^{s} kappa_{s,k} I_{alpha+s/2, k},
///   S_alpha = sum_s h^s sum_{k=ceil(s/2)}^{s} w_{s,k}
///             [ (1 - a) I_{alpha+s/2, k} + a I_{alpha+1+s/2, k} ],
/// with w_{s,k} = C(-1/2,k) C(k,s-k) 2^{2k-s} and a = 1/e^2 (the S weights
/// arise from distributing the factor T = (1-a) + aE over the members).
/// Every member is an endpoint difference I(tau1) - I(tau0).

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "geodint/model.hpp"

namespace geodint {

/// Value plus order-by-order breakdown of one assembled series.
struct IntegralResult {
  double value = 0.0;          ///< sum of `terms`
  std::vector<double> terms;   ///< contribution of each series order s = 0..orders_used
  double trunc_estimate = 0.0; ///< |terms.back()|, reported, never subtracted
  int orders_used = 0;
  bool convergence_warning = false;  ///< |terms.back()| > kWarnRatio * |terms[0]|
};

/// Evaluate one member I_{beta,k}(tau) (beta carried as beta2 = 2*beta),
/// dispatching to the elementary family (integer beta >= 0), the elliptic
/// family (half-integer beta >= -1/2), or the closed-form specials
/// (beta,k) in {(-3/2,0), (-1,0), (-1,1)}. Throws UnsupportedIndexError for
/// anything else; the assembled series never requests anything else.
double member(int beta2, int k, double tau, const FamilyContext& ctx);

/// Endpoint-difference cache: delta(beta2,k) = I_{beta,k}(tau1) - I_{beta,k}(tau0).
/// One table serves every series of a single evaluation, so shared members
/// (the families overlap heavily between I_alpha and S_alpha) are computed once.
class MemberTable {
 public:
  MemberTable(const FamilyContext& ctx, double tau0, double tau1);

  double delta(int beta2, int k);

  const FamilyContext& ctx() const { return ctx_; }
  double tau0() const { return tau0_; }
  double tau1() const { return tau1_; }

 private:
  FamilyContext ctx_;
  double tau0_;
  double tau1_;
  std::map<std::pair<int, int>, double> cache_;
};

/// I_alpha power series (alpha carried as alpha2 = 2*alpha), truncated after
/// order s = `order`. terms[s] = (-h)^s sum_k kappa_{s,k} delta(alpha2+s, k).
IntegralResult i_alpha_series(int alpha2, double h, int order, MemberTable& table);

/// S_alpha power series (alpha2 = 2*alpha in {0, 1, -3, -2}), truncated after
/// order s = `order`; the inner k-sum starts at ceil(s/2), not 0.
IntegralResult s_alpha_series(int alpha2, double h, int order, MemberTable& table);

/// Longitude change Delta_lambda (radians) between tau0 and tau1 along the
/// geodesic (h, c). terms[s] merges the same-order contributions of I_1 and
/// I_{-1/2}. Validates the domain first.
IntegralResult longitude_integral(const Ellipsoid& ell, const GeodesicSpec& spec);

/// Arc length between tau0 and tau1, scaled by rho_e (multiply by rho_e for a
/// physical length). Validates the domain first.
IntegralResult distance_integral(const Ellipsoid& ell, const GeodesicSpec& spec);

/// d(Delta_lambda)/dc at fixed (h, tau0, tau1), in the analytically cancelled
/// form: the product rule gives the bracket series plus c * d(bracket)/dc, and
/// c * dI_{beta,k}/dc = (2k+1)(I_{beta,k+1} - I_{beta,k}) removes every 1/c,
/// so the expression is regular through c = 0 (where members lose their
/// k-dependence and the correction vanishes term by term).
IntegralResult dlongitude_dc(const Ellipsoid& ell, const GeodesicSpec& spec);

}  // namespace geodint
