/// @file elliptic.hpp
/// @brief Incomplete elliptic integrals F, E, Pi via Carlson symmetric forms.
///
/// Conventions (Legendre/Jacobi, modulus k, characteristic n):
///   F (xi, k)    = integral_0^xi dtheta / sqrt(1 - k^2 sin^2 theta)
///   E (xi, k)    = integral_0^xi sqrt(1 - k^2 sin^2 theta) dtheta
///   Pi(xi, n, k) = integral_0^xi dtheta / ((1 - n sin^2 theta) sqrt(1 - k^2 sin^2 theta))
///
/// The Carlson kernels use the duplication theorem (Carlson 1995) with series
/// truncation tolerances chosen for ~1e-16 relative accuracy in double
/// precision. All library call sites satisfy n sin^2 xi < 1 and k sin xi < 1,
/// so no principal-value branches are implemented.

#pragma once

namespace geodint {

/// Carlson symmetric integral R_F(x, y, z); x, y, z >= 0, at most one zero.
double carlson_rf(double x, double y, double z);

/// Degenerate form R_C(x, y) = R_F(x, y, y); requires y > 0 here.
double carlson_rc(double x, double y);

/// Carlson integral R_D(x, y, z) (z-weighted, degree -3/2); z > 0.
double carlson_rd(double x, double y, double z);

/// Carlson integral R_J(x, y, z, p); requires p > 0 (no Cauchy principal value).
double carlson_rj(double x, double y, double z, double p);

/// Incomplete elliptic integral of the first kind; xi in [0, pi/2], k sin xi < 1.
double ellip_f(double xi, double k);

/// Incomplete elliptic integral of the second kind.
double ellip_e(double xi, double k);

/// Incomplete elliptic integral of the third kind; requires n sin^2 xi < 1.
double ellip_pi(double xi, double n, double k);

/// Amplitude, modulus, and characteristic of the reduction of integrals over
/// dt / sqrt((A^2 - t^2)(b^2 - t^2)) with 0 < b < A:
///   sin xi = t / b,  k = b / A,  n = b^2 (characteristic of the Pi members).
struct Amplitude {
  double xi = 0.0;
  double k = 0.0;
  double n = 0.0;
};

}  // namespace geodint
