/// @file model.hpp
/// @brief Ellipsoid geometry, branch parameters and domain validation for
///        constant-altitude geodesic integrals over an oblate ellipsoid.
///
/// Conventions used throughout the library:
///  - tau = sin(latitude) is the integration variable,
///  - T = 1 - tau^2,  E = 1 - e^2 tau^2   (so the meridian arc and normal
///    curvature radii are M = rho_e (1-e^2) E^{-3/2} and N = rho_e E^{-1/2}),
///  - all lengths (h, c, s) are scaled by the equatorial radius rho_e inside
///    the library; rho_e only reappears when converting arc length to
///    physical units.
///
/// Both integrands share the branch factor sqrt((1 + h sqrt(E))^2 T - c^2 E).
/// At h = 0 it factors exactly: T - c^2 E = (1 - c^2 e^2)(b^2 - tau^2) with
/// b^2 = (1 - c^2) / (1 - c^2 e^2), and E = e^2 (A^2 - tau^2) with A = 1/e.
/// The pair (A, b) are the outer/inner turning points of every reduced
/// integrand, which is why BranchParams is central to all member formulas.

#pragma once

#include <stdexcept>
#include <string>

namespace geodint {

// ---------------------------------------------------------------------------
// Error types
// ---------------------------------------------------------------------------

/// A geometric or parameter bound was violated (reported bound is named in what()).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative solver failed to bracket a root or to converge.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature exhausted its subdivision budget before reaching tolerance.
class SubdivisionLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reduction-family member (beta, k) outside the implemented index set was requested.
class UnsupportedIndexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Defaults
// ---------------------------------------------------------------------------

inline constexpr int kDefaultOrder = 8;        ///< truncation order of the altitude series
inline constexpr int kMaxOrder = 16;           ///< highest supported series order
inline constexpr double kDefaultMargin = 0.05; ///< |tau| <= b (1 - margin) guard band
inline constexpr double kDefaultHMax = 0.1;    ///< default bound on scaled altitude
inline constexpr double kWarnRatio = 1e-3;     ///< |last term|/|first term| warning threshold

// ---------------------------------------------------------------------------
// Geometry
// ---------------------------------------------------------------------------

/// Oblate ellipsoid of revolution: equatorial radius rho_e, eccentricity e,
/// polar radius rho_e sqrt(1 - e^2).
struct Ellipsoid {
  double rho_e = 1.0;
  double e = 0.0;
};

/// Validates rho_e > 0 and 0 < e < 1 (the reduction machinery needs a genuinely
/// oblate body; spherical behaviour is recovered continuously as e -> 0).
Ellipsoid make_ellipsoid(double rho_e, double e);

/// Polar radius rho_e sqrt(1 - e^2).
double rho_p(const Ellipsoid& ell);

/// One constant-altitude geodesic evaluation request. h and c are in units of
/// rho_e; tau0/tau1 are sines of the endpoint latitudes.
struct GeodesicSpec {
  double h = 0.0;
  double c = 0.0;
  double tau0 = 0.0;
  double tau1 = 0.0;
  int order = kDefaultOrder;
};

/// Derived constants of the h = 0 branch factorisation
///   T - c^2 E = (1 - c^2 e^2)(b^2 - tau^2),   E = e^2 (a - tau^2).
struct BranchParams {
  double a = 0.0;               ///< 1/e^2; sqrt(a) = 1/e is the outer turning point
  double b = 0.0;               ///< inner turning point; the tau domain is |tau| < b
  double modulus = 0.0;         ///< elliptic modulus of all F/E/Pi reductions: b/sqrt(a) = b e
  double prefactor_base = 0.0;  ///< 1 - c^2 e^2
};

/// Computes BranchParams; requires 0 < e < 1 and 0 <= c < 1.
BranchParams branch_params(double e, double c);

/// Pointwise quantities at a given tau (handy for integrands and tests).
struct EvalPoint {
  double tau = 0.0;
  double T = 0.0;  ///< 1 - tau^2
  double E = 0.0;  ///< 1 - e^2 tau^2
  double x = 0.0;  ///< tau^2
  double z = 0.0;  ///< 1/(b^2 - x), the rationalising variable of the elementary family
};

/// Requires |tau| < b. (T, E, x, z are all even in tau.)
EvalPoint eval_point(double tau, double e, const BranchParams& bp);

/// Bundle passed through every member-evaluation routine.
struct FamilyContext {
  double e = 0.0;
  double c = 0.0;
  BranchParams bp;
};

/// Validates (e, c) and precomputes the branch constants.
FamilyContext make_context(double e, double c);

/// Checks every bound the series evaluation relies on and throws DomainError
/// naming the violated bound:
///   0 < e < 1,  0 <= c < 1,  0 <= h <= h_max,  0 <= order <= kMaxOrder,
///   |tau0|, |tau1| <= b(c) (1 - margin).
void validate_domain(const Ellipsoid& ell, const GeodesicSpec& spec,
                     double margin = kDefaultMargin, double h_max = kDefaultHMax);

}  // namespace geodint
