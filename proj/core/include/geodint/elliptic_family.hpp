/// @file elliptic_family.hpp
/// @brief Half-integer-beta members I_{beta,k} via incomplete elliptic
///        integrals: the D_{2v} ladder (k >= 1) and the Pi / A_{2l} ladder
///        (k = 0).
///
/// With A = 1/e and b the branch point, every half-integer member reduces to
/// integrals over 1/sqrt((A^2 - t^2)(b^2 - t^2)) weighted by powers of
/// (b^2 - t^2) and t^2. Writing sin xi = t/b and modulus k = b/A, the core
/// ladder is
///   K_v(tau) = integral_0^tau (b^2-t^2)^{-v} dt / sqrt((A^2-t^2)(b^2-t^2))
///            = D_{2v} / (A b^{2v}),
/// with D_0 = F(xi,k) and closed forms for D_2 and D_{-2}; the three-term
/// recurrence extends the ladder in both directions (negative v arises for
/// beta >= 3/2 with k >= 1). The k = 0 members instead use Pi(xi, b^2, k) and
/// the ladder A_{2l} = integral_0^xi sin^{2l}(theta) dtheta / sqrt(1 - k^2 sin^2 theta),
/// which is evaluated by an all-positive-term series (the upward recurrence
/// cancels catastrophically at small tau and is kept only as a test residual).

#pragma once

#include <vector>

#include "geodint/elliptic.hpp"
#include "geodint/model.hpp"

namespace geodint {

/// Amplitude/modulus/characteristic of the (A, b) reduction at tau:
/// sin xi = |tau|/b, k = b/A = b e, n = b^2.
Amplitude amplitude(double tau, const BranchParams& bp);

/// Ladder of K_v = D_{2v}/(A b^{2v}) for v in [v_min, v_max] at fixed tau >= 0.
class DTable {
 public:
  DTable(int v_min, std::vector<double> k_values, double A, double b2);
  /// K_v itself (the literal integral).
  double k(int v) const { return k_[static_cast<std::size_t>(v - v_min_)]; }
  /// D_{2v} = K_v A b^{2v}.
  double d(int v) const;
  int v_min() const { return v_min_; }
  int v_max() const { return v_min_ + static_cast<int>(k_.size()) - 1; }

 private:
  int v_min_;
  std::vector<double> k_;
  double A_;
  double b2_;
};

/// Builds the ladder from the F/E/R_D seeds plus the three-term recurrence,
/// run upward for v >= 2 and downward for v <= -2. Requires |tau| < b.
DTable d_seq(int v_min, int v_max, double tau, const FamilyContext& ctx);

/// Products b^{2l} A_{2l} for l = 0..l_max at |tau| <= b (tau >= 0 in,
/// oddness handled by callers).
std::vector<double> a_seq(int l_max, double tau, const FamilyContext& ctx);

/// Jbar_{beta,k}(tau) = 2 integral_0^tau (1-t^2)^{k-1} (A^2-t^2)^beta
/// (b^2-t^2)^{-k-1/2} dt for half-integer beta = beta2/2 (beta2 odd >= -1),
/// k >= 1. Normalised so that Jbar_{beta,k}(tau) = J_{beta,k}(tau^2) for the
/// integer-beta overlap ("alignment").
double jbar_halfint(int beta2, int k, double tau, const FamilyContext& ctx);

/// The k = 0 case: Jbar_{beta,0}(tau) = 2 integral_0^tau (A^2-t^2)^beta
/// / ((1-t^2) sqrt(b^2-t^2)) dt, via Pi(xi, b^2, k) and the A ladder.
double jbar_beta0(int beta2, double tau, const FamilyContext& ctx);

/// Assembled half-integer member I_{beta,k} (prefactor included, odd in tau);
/// beta2 odd and >= -1, k >= 0.
double i_halfint(int beta2, int k, double tau, const FamilyContext& ctx);

}  // namespace geodint
