/// @file test_helpers.hpp
/// @brief Shared helpers for the unit and acceptance tests: relative
///        difference, and direct quadrature of the raw member integrands
///        (the independent oracle every closed form is checked against).

#pragma once

#include <algorithm>
#include <cmath>

#include "geodint/model.hpp"
#include "geodint/quadrature.hpp"

namespace testutil {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

/// integral_0^tau E^beta T^{k-1} (T - c^2 E)^{-k-1/2} dt by adaptive
/// quadrature of the raw integrand (beta passed as beta2 = 2*beta).
inline double member_oracle(int beta2, int k, double tau,
                            const geodint::FamilyContext& ctx,
                            const geodint::Quadrature& q = {}) {
  const double e2 = ctx.e * ctx.e;
  const double c2 = ctx.c * ctx.c;
  auto f = [=](double t) {
    const double T = 1.0 - t * t;
    const double E = 1.0 - e2 * t * t;
    const double W = T - c2 * E;
    return std::pow(E, 0.5 * beta2) * std::pow(T, k - 1) *
           std::pow(W, -k - 0.5);
  };
  return geodint::adaptive_quad(f, 0.0, tau, q).value;
}

}  // namespace testutil
