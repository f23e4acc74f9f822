/// @file quadrature.cpp
/// @brief Global adaptive G7/K15 quadrature (QUADPACK dqk15 node set).

#include "geodint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

namespace geodint {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (positive half) and weights, plus the
// embedded 7-point Gauss weights; values from QUADPACK's dqk15.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double lo, hi;
  double value;
  double error;
};

// One K15 evaluation over [lo, hi]; error estimate is QUADPACK's damped
// |K15 - G7| heuristic.
Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = f(center);
  double result_gauss = kWg[3] * fc;
  double result_kronrod = kWgk[7] * fc;
  double resabs = std::fabs(result_kronrod);
  double fv[15];
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    result_kronrod += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);  // odd Kronrod nodes are Gauss nodes
  }
  const double mean = 0.5 * result_kronrod;
  double resasc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));
  resasc *= std::fabs(half);
  resabs *= std::fabs(half);

  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.value = result_kronrod * half;
  double err = std::fabs((result_kronrod - result_gauss) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / eps50) err = std::max(err, eps50 * resabs);
  p.error = err;
  return p;
}

}  // namespace

QuadResult adaptive_quad(const std::function<double(double)>& f, double lo, double hi,
                         const Quadrature& q) {
  QuadResult out;
  if (lo == hi) return out;
  double sign = 1.0;
  double a = lo, b = hi;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }

  std::vector<Panel> panels;
  panels.reserve(64);
  panels.push_back(gk15(f, a, b));

  auto totals = [&panels]() {
    double v = 0.0, e = 0.0;
    for (const Panel& p : panels) {
      v += p.value;
      e += p.error;
    }
    return std::pair<double, double>(v, e);
  };

  for (int iter = 0; iter < q.max_subdivisions; ++iter) {
    auto [value, error] = totals();
    if (error <= std::max(q.abs_tol, q.rel_tol * std::fabs(value))) {
      out.value = sign * value;
      out.error = error;
      out.segments = static_cast<int>(panels.size());
      return out;
    }
    // Split the worst panel.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;
    const Panel w = panels[worst];
    const double mid = 0.5 * (w.lo + w.hi);
    if (mid <= w.lo || mid >= w.hi) break;  // panel no longer splittable in double
    panels[worst] = gk15(f, w.lo, mid);
    panels.push_back(gk15(f, mid, w.hi));
  }

  auto [value, error] = totals();
  std::ostringstream os;
  os << "adaptive_quad: subdivision limit " << q.max_subdivisions
     << " reached, error estimate " << error << " for value " << sign * value;
  throw SubdivisionLimitError(os.str());
}

double longitude_integrand(double tau, double e, double h, double c) {
  const double T = 1.0 - tau * tau;
  const double E = 1.0 - e * e * tau * tau;
  const double sE = std::sqrt(E);
  const double g = 1.0 + h * sE;
  const double W = g * g * T - c * c * E;
  return c * (h * E * sE + 1.0 - e * e) / (g * T * sE * std::sqrt(W));
}

double distance_integrand(double tau, double e, double h, double c) {
  const double T = 1.0 - tau * tau;
  const double E = 1.0 - e * e * tau * tau;
  const double sE = std::sqrt(E);
  const double g = 1.0 + h * sE;
  const double W = g * g * T - c * c * E;
  const double num = h * E * sE + h * h * E * E + (1.0 - e * e) + h * (1.0 - e * e) * sE;
  return num / (E * sE * std::sqrt(W));
}

double quad_longitude(const Ellipsoid& ell, const GeodesicSpec& spec, const Quadrature& q) {
  validate_domain(ell, spec);
  const double e = ell.e, h = spec.h, c = spec.c;
  auto f = [e, h, c](double tau) { return longitude_integrand(tau, e, h, c); };
  return adaptive_quad(f, spec.tau0, spec.tau1, q).value;
}

double quad_distance(const Ellipsoid& ell, const GeodesicSpec& spec, const Quadrature& q) {
  validate_domain(ell, spec);
  const double e = ell.e, h = spec.h, c = spec.c;
  auto f = [e, h, c](double tau) { return distance_integrand(tau, e, h, c); };
  return ell.rho_e * adaptive_quad(f, spec.tau0, spec.tau1, q).value;
}

}  // namespace geodint
