/// @file model.cpp
/// @brief Geometry helpers, branch constants, and domain validation.

#include "geodint/model.hpp"

#include <cmath>
#include <sstream>

namespace geodint {

namespace {

[[noreturn]] void fail_domain(const std::string& bound, double got) {
  std::ostringstream os;
  os << "domain error: violated bound " << bound << " (got " << got << ")";
  throw DomainError(os.str());
}

}  // namespace

Ellipsoid make_ellipsoid(double rho_e, double e) {
  if (!(rho_e > 0.0)) fail_domain("rho_e > 0", rho_e);
  if (!(e > 0.0 && e < 1.0)) fail_domain("0 < e < 1", e);
  return Ellipsoid{rho_e, e};
}

double rho_p(const Ellipsoid& ell) { return ell.rho_e * std::sqrt(1.0 - ell.e * ell.e); }

BranchParams branch_params(double e, double c) {
  if (!(e > 0.0 && e < 1.0)) fail_domain("0 < e < 1", e);
  if (!(c >= 0.0 && c < 1.0)) fail_domain("0 <= c < 1", c);
  BranchParams bp;
  const double e2 = e * e;
  const double c2 = c * c;
  bp.a = 1.0 / e2;
  bp.prefactor_base = 1.0 - c2 * e2;
  // b^2 = (1-c^2)/(1-c^2 e^2) lies in (0, 1]; b = 1 exactly when c = 0.
  bp.b = std::sqrt((1.0 - c2) / bp.prefactor_base);
  bp.modulus = bp.b * e;  // b / sqrt(a)
  return bp;
}

EvalPoint eval_point(double tau, double e, const BranchParams& bp) {
  if (!(std::fabs(tau) < bp.b)) fail_domain("|tau| < b", tau);
  EvalPoint p;
  p.tau = tau;
  p.x = tau * tau;
  p.T = 1.0 - p.x;
  p.E = 1.0 - e * e * p.x;
  p.z = 1.0 / (bp.b * bp.b - p.x);
  return p;
}

FamilyContext make_context(double e, double c) {
  FamilyContext ctx;
  ctx.e = e;
  ctx.c = c;
  ctx.bp = branch_params(e, c);  // validates e, c
  return ctx;
}

void validate_domain(const Ellipsoid& ell, const GeodesicSpec& spec, double margin,
                     double h_max) {
  if (!(ell.rho_e > 0.0)) fail_domain("rho_e > 0", ell.rho_e);
  if (!(ell.e > 0.0 && ell.e < 1.0)) fail_domain("0 < e < 1", ell.e);
  if (!(spec.c >= 0.0 && spec.c < 1.0)) fail_domain("0 <= c < 1", spec.c);
  if (!(spec.h >= 0.0)) fail_domain("h >= 0", spec.h);
  if (!(spec.h <= h_max)) fail_domain("h <= h_max", spec.h);
  if (spec.order < 0 || spec.order > kMaxOrder) fail_domain("0 <= order <= 16", spec.order);
  const BranchParams bp = branch_params(ell.e, spec.c);
  const double limit = bp.b * (1.0 - margin);
  if (!(std::fabs(spec.tau0) <= limit)) fail_domain("|tau0| <= b (1 - margin)", spec.tau0);
  if (!(std::fabs(spec.tau1) <= limit)) fail_domain("|tau1| <= b (1 - margin)", spec.tau1);
}

}  // namespace geodint
