/// @file quadrature.hpp
/// @brief Adaptive Gauss-Kronrod (G7/K15) quadrature and the raw geodesic
///        integrands it is pointed at.
///
/// This module is the independent reference route of the library: it
/// evaluates the longitude and arc-length integrals (and, in the tests, every
/// reduction-family member) directly from their defining integrals, without
/// any of the series/elliptic machinery. The two routes are kept strictly
/// separate so that each can check the other.

#pragma once

#include <functional>

#include "geodint/model.hpp"

namespace geodint {

/// Tolerances and budget of the global adaptive strategy.
struct Quadrature {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;
};

/// Result of one adaptive integration.
struct QuadResult {
  double value = 0.0;
  double error = 0.0;  ///< accumulated Kronrod error estimate
  int segments = 0;    ///< number of panels in the final partition
};

/// Integrates f over [lo, hi] (sign-reversing if lo > hi) by global adaptive
/// bisection of the worst-error panel, each panel evaluated with a 15-point
/// Kronrod rule against its embedded 7-point Gauss rule. The rule never
/// samples the endpoints, so integrable endpoint singularities (for example
/// x^{-1/2}) are handled, just with more subdivisions. Throws
/// SubdivisionLimitError if the budget is exhausted before
/// error <= max(abs_tol, rel_tol |value|).
QuadResult adaptive_quad(const std::function<double(double)>& f, double lo, double hi,
                         const Quadrature& q = {});

/// Integrand of the longitude increment d(lambda)/d(tau) at altitude h:
///   c [h E^{3/2} + 1 - e^2] / [(1 + h sqrt(E)) T sqrt(E) sqrt(W)],
/// where T = 1 - tau^2, E = 1 - e^2 tau^2, W = (1 + h sqrt(E))^2 T - c^2 E.
double longitude_integrand(double tau, double e, double h, double c);

/// Integrand of the scaled arc length d(s/rho_e)/d(tau):
///   [h E^{3/2} + h^2 E^2 + (1 - e^2) + h (1 - e^2) sqrt(E)] / (E^{3/2} sqrt(W)).
double distance_integrand(double tau, double e, double h, double c);

/// Reference longitude increment (radians) by direct quadrature.
double quad_longitude(const Ellipsoid& ell, const GeodesicSpec& spec, const Quadrature& q = {});

/// Reference arc length in physical units (scaled integral times ell.rho_e).
double quad_distance(const Ellipsoid& ell, const GeodesicSpec& spec, const Quadrature& q = {});

}  // namespace geodint
