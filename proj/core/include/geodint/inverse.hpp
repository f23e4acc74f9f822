/// @file inverse.hpp
/// @brief Recovery of the obliquity parameter c from a longitude change:
///        solve Delta_lambda(c) = target for c in [0, c_upper] by safeguarded
///        Newton iteration (bisection fallback inside a maintained bracket).
///
/// c_upper is the largest obliquity whose branch point still clears the
/// requested tau range with the domain margin: from b^2 = (1-c^2)/(1-c^2 e^2),
///   c_upper^2 = (1 - B^2) / (1 - B^2 e^2),  B = max(|tau0|,|tau1|)/(1-margin),
/// so every iterate stays inside the series domain by construction.

#pragma once

#include "geodint/model.hpp"

namespace geodint {

/// One c-from-Delta_lambda problem. `margin` must be at least the margin the
/// longitude evaluation itself enforces (both default to kDefaultMargin).
struct InverseProblem {
  double target = 0.0;  ///< desired Delta_lambda, radians
  double tau0 = 0.0;
  double tau1 = 0.0;
  double h = 0.0;             ///< scaled altitude
  int order = kDefaultOrder;  ///< series truncation order for each evaluation
  double tolerance = 1e-13;   ///< on the residual |Delta_lambda(c) - target|
  int max_iter = 50;
  double margin = kDefaultMargin;
};

struct InverseSolution {
  double c = 0.0;
  int iterations = 0;  ///< Newton/bisection steps (pre-bracket sampling excluded)
  double residual = 0.0;
};

/// Solve Delta_lambda(c) = target.
///
/// target = 0 returns c = 0 immediately (the longitude carries an overall
/// factor c). Otherwise the solver samples Delta_lambda on [0, c_upper] to
/// verify monotonicity and locate a starting bracket, then runs Newton with
/// the analytic derivative, falling back to bisection whenever a step would
/// leave the bracket.
///
/// Throws DomainError if no admissible c exists for the tau range, and
/// SolverError on "no bracket" (target beyond Delta_lambda(c_upper)), on a
/// non-monotone sample sweep, or on failure to converge within max_iter.
InverseSolution solve_c(const InverseProblem& prob, const Ellipsoid& ell);

}  // namespace geodint
