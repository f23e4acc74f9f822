#include "geodint/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "geodint/series.hpp"

namespace geodint {

namespace {

GeodesicSpec spec_at(const InverseProblem& prob, double c) {
  GeodesicSpec spec;
  spec.h = prob.h;
  spec.c = c;
  spec.tau0 = prob.tau0;
  spec.tau1 = prob.tau1;
  spec.order = prob.order;
  return spec;
}

}  // namespace

InverseSolution solve_c(const InverseProblem& prob, const Ellipsoid& ell) {
  const double tau_max = std::max(std::abs(prob.tau0), std::abs(prob.tau1));
  const double bound = tau_max / (1.0 - prob.margin);
  if (bound >= 1.0) {
    throw DomainError(
        "domain error: tau range clears no branch point, even at c = 0 "
        "(need max|tau| < 1 - margin)");
  }
  const double b2 = bound * bound;
  // Largest admissible obliquity; shrunk by one part in 1e12 so that the
  // recomputed b(c_upper) cannot round below the validation threshold.
  const double c_upper =
      std::sqrt((1.0 - b2) / (1.0 - b2 * ell.e * ell.e)) * (1.0 - 1e-12);

  if (prob.target == 0.0) return {0.0, 0, 0.0};

  const auto eval = [&](double c) {
    return longitude_integral(ell, spec_at(prob, c)).value;
  };

  // Monotonicity sweep; doubles as bracket location. g[0] = 0 exactly.
  constexpr int kSamples = 5;
  std::vector<double> cs(kSamples), gs(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    cs[static_cast<std::size_t>(i)] = c_upper * i / (kSamples - 1);
    gs[static_cast<std::size_t>(i)] = eval(cs[static_cast<std::size_t>(i)]);
  }
  const double dir = gs.back() > 0.0 ? 1.0 : (gs.back() < 0.0 ? -1.0 : 0.0);
  if (dir == 0.0) {
    throw SolverError("no bracket: longitude vanishes identically on [0, c_upper]");
  }
  for (int i = 0; i + 1 < kSamples; ++i) {
    if ((gs[static_cast<std::size_t>(i + 1)] - gs[static_cast<std::size_t>(i)]) * dir < 0.0) {
      throw SolverError("longitude not monotone in c on [0, c_upper]");
    }
  }

  // First sample interval with a sign change of f(c) = g(c) - target.
  int seg = -1;
  for (int i = 0; i + 1 < kSamples; ++i) {
    const double flo = gs[static_cast<std::size_t>(i)] - prob.target;
    const double fhi = gs[static_cast<std::size_t>(i + 1)] - prob.target;
    if (flo == 0.0 || flo * fhi < 0.0) {
      seg = i;
      break;
    }
    if (fhi == 0.0) {
      seg = i;
      break;
    }
  }
  if (seg < 0) {
    throw SolverError(
        "no bracket: target outside the attainable longitude range at c_upper");
  }

  double lo = cs[static_cast<std::size_t>(seg)];
  double hi = cs[static_cast<std::size_t>(seg + 1)];
  double flo = gs[static_cast<std::size_t>(seg)] - prob.target;
  double fhi = gs[static_cast<std::size_t>(seg + 1)] - prob.target;

  // Secant start inside the located interval.
  double c = (fhi != flo) ? lo - flo * (hi - lo) / (fhi - flo)
                          : 0.5 * (lo + hi);
  c = std::clamp(c, lo, hi);

  for (int iter = 1; iter <= prob.max_iter; ++iter) {
    const double fc = eval(c) - prob.target;
    if (std::abs(fc) <= prob.tolerance) return {c, iter, std::abs(fc)};

    if ((fc > 0.0) == (fhi > 0.0)) {
      hi = c;
      fhi = fc;
    } else {
      lo = c;
      flo = fc;
    }

    const double slope = dlongitude_dc(ell, spec_at(prob, c)).value;
    double next = (slope != 0.0) ? c - fc / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
    c = next;
  }
  throw SolverError("solver did not converge within max_iter iterations");
}

}  // namespace geodint
