/// @file elementary.hpp
/// @brief Integer-beta members I_{beta,k} of the reduction family, in closed
///        elementary form.
///
/// The family is
///   I_{beta,k}(tau) = integral_0^tau E^beta T^{k-1} (T - c^2 E)^{-k-1/2} dt,
/// with T = 1 - t^2, E = 1 - e^2 t^2. Using T - c^2 E = (1-c^2 e^2)(b^2 - t^2)
/// and E = e^2 (A^2 - t^2), A = 1/e, the substitution x = t^2 gives
///   I_{beta,k} = e^{2 beta} (1 - c^2 e^2)^{-k-1/2} (1/2) J_{beta,k}(tau^2),
///   J_{beta,k}(x) = integral_0^x u^{-1/2} (1-u)^{k-1} (A^2-u)^beta (b^2-u)^{-k-1/2} du.
/// For integer beta >= 0 and k >= 1 the further substitution z = 1/(b^2 - u)
/// rationalises J into sums of primitives of z^t / sqrt(b^2 z - 1); every term
/// of the expansion is positive, so the assembly is cancellation-free.
/// The k = 0 member reduces to an inverse tangent plus a ladder of
/// integral_0^tau (b^2 - t^2)^{i-1/2} dt terms.

#pragma once

#include <vector>

#include "geodint/model.hpp"

namespace geodint {

/// Primitive of z^{t_exp} / sqrt(coef z - 1) (vanishing at z = 1/coef), for any
/// integer t_exp. Negative exponents use the arctan reduction of
/// integral dw / (1 + w^2)^n with w = sqrt(coef z - 1); the branch is chosen
/// for coef z > 1 and every form is verified by differentiation in the tests.
double antider_zpow(int t_exp, double coef, double z);

/// B_i(tau) = integral_0^tau (b^2 - t^2)^{i - 1/2} dt for i = 0..i_max
/// (B_0 = asin(tau/b); upward Legendre ladder, stable for b <= 1).
std::vector<double> b_ladder(int i_max, double b, double tau);

/// J_{beta,k}(x) for integer beta >= 0, k >= 1, by the z = 1/(b^2 - u)
/// rationalisation (double binomial sum over positive terms).
double j_int(int beta, int k, double x, const FamilyContext& ctx);

/// Single-sum closed form of J_{0,k}(x), k >= 1:
///   2 sqrt(x) / (b^{2k} sqrt(b^2 - x)) sum_{l=0}^{k-1} C(k-1,l)
///       [(1-b^2) x / (b^2-x)]^l / (2l+1).
/// Algebraically equal to j_int(0, k, x); kept as an independent form.
double j0k(int k, double x, const FamilyContext& ctx);

/// Assembled member I_{beta,0} (prefactor included, odd in tau):
/// inverse-tangent leading term plus the B ladder.
double i_beta0(int beta, double tau, const FamilyContext& ctx);

/// Assembled member I_{beta,k} for integer beta >= 0, any k >= 0
/// (prefactor included, odd in tau).
double i_int(int beta, int k, double tau, const FamilyContext& ctx);

/// arctan(y sqrt(u)) / sqrt(u), continuous through u -> 0 (series fallback for
/// tiny u y^2); used by the k = 0 members so that c -> 0 is exact.
double atan_over_root(double u, double y);

}  // namespace geodint
