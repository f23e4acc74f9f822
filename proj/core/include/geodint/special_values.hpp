/// @file special_values.hpp
/// @brief Closed forms for the three members outside the generic families:
///        I_{-3/2,0}, I_{-1,0} and I_{-1,1}.
///
/// These are the only beta <= -1 members the assembled arc-length series ever
/// needs. Each is obtained by partial-fraction decomposition over the factors
/// (1 - t^2), (A^2 - t^2), (b^2 - t^2) with A = 1/e, and each reduces to
/// inverse tangents plus (for I_{-3/2,0}) incomplete elliptic integrals. The
/// prefactors below are fixed by first-principles derivation and verified by
/// the quadrature oracle: after the e-powers are merged they collapse to
///   I_{-3/2,0}, I_{-1,0}:  1/((1-e^2) sqrt(1-c^2 e^2)),
///   I_{-1,1}:              1/((1-b^2 e^2) (1-c^2 e^2)^{3/2}).

#pragma once

#include "geodint/model.hpp"

namespace geodint {

/// I_{-3/2,0}(tau) = integral_0^tau E^{-3/2} / (T sqrt(T - c^2 E)) dt:
///   [ Pi(xi,b^2,k) - (E(xi,k) - (t/A) sqrt((b^2-t^2)/(A^2-t^2)))/(A^2-b^2) ]
///   / ((1-e^2) sqrt(1-c^2 e^2)).
/// The relative sign of the E and boundary terms is easy to get wrong in
/// handbook reductions; it is pinned here by differentiation tests. Odd in tau.
double i_m32_0(double tau, const FamilyContext& ctx);

/// I_{-1,0}(tau) = integral_0^tau E^{-1} / (T sqrt(T - c^2 E)) dt: difference
/// of two inverse tangents (the first one continuous through c -> 0 via the
/// atan_over_root limit), scaled by 1/((1-e^2) sqrt(1-c^2 e^2)). The inner
/// arctan keeps the sign of its argument; both branches are differentiation-
/// tested.
double i_m1_0(double tau, const FamilyContext& ctx);

/// I_{-1,1}(tau) = integral_0^tau E^{-1} (T - c^2 E)^{-3/2} dt:
///   [ t/(b^2 sqrt(b^2-t^2)) - arctan((t/A) sqrt((A^2-b^2)/(b^2-t^2)))
///     / (A sqrt(A^2-b^2)) ] / ((1-b^2 e^2)(1-c^2 e^2)^{3/2}). Odd in tau.
double i_m1_1(double tau, const FamilyContext& ctx);

}  // namespace geodint
