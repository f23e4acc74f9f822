/// @file elliptic.cpp
/// @brief Carlson duplication algorithm for R_F, R_C, R_D, R_J and the
///        Legendre-form wrappers F, E, Pi.
///
/// The iterations and truncated Taylor tails follow Carlson, "Numerical
/// computation of real or complex elliptic integrals" (1995). The ERRTOL
/// values bound the scaled argument spread so that the fifth/sixth order
/// series tails are accurate to ~1e-16 relative.

#include "geodint/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geodint {

namespace {
constexpr int kMaxIter = 200;  // duplication converges quartically; this is generous
}

double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0 || (x + y) == 0.0 || (y + z) == 0.0 || (z + x) == 0.0)
    throw std::invalid_argument("carlson_rf: arguments must be >= 0 with at most one zero");
  constexpr double ERRTOL = 0.0025;
  constexpr double THIRD = 1.0 / 3.0;
  constexpr double C1 = 1.0 / 24.0, C2 = 0.1, C3 = 3.0 / 44.0, C4 = 1.0 / 14.0;
  double xt = x, yt = y, zt = z;
  double ave = 0.0, delx = 0.0, dely = 0.0, delz = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lam = sx * (sy + sz) + sy * sz;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    zt = 0.25 * (zt + lam);
    ave = THIRD * (xt + yt + zt);
    delx = (ave - xt) / ave;
    dely = (ave - yt) / ave;
    delz = (ave - zt) / ave;
    if (std::max({std::fabs(delx), std::fabs(dely), std::fabs(delz)}) <= ERRTOL) break;
  }
  const double e2 = delx * dely - delz * delz;
  const double e3 = delx * dely * delz;
  return (1.0 + (C1 * e2 - C2 - C3 * e3) * e2 + C4 * e3) / std::sqrt(ave);
}

double carlson_rc(double x, double y) {
  if (x < 0.0 || y <= 0.0)
    throw std::invalid_argument("carlson_rc: requires x >= 0, y > 0");
  constexpr double ERRTOL = 0.0012;
  constexpr double THIRD = 1.0 / 3.0;
  constexpr double C1 = 0.3, C2 = 1.0 / 7.0, C3 = 0.375, C4 = 9.0 / 22.0;
  double xt = x, yt = y;
  double ave = 0.0, s = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    const double lam = 2.0 * std::sqrt(xt) * std::sqrt(yt) + yt;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    ave = THIRD * (xt + yt + yt);
    s = (yt - ave) / ave;
    if (std::fabs(s) <= ERRTOL) break;
  }
  return (1.0 + s * s * (C1 + s * (C2 + s * (C3 + s * C4)))) / std::sqrt(ave);
}

double carlson_rd(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || (x + y) == 0.0 || z <= 0.0)
    throw std::invalid_argument("carlson_rd: requires x, y >= 0 (not both zero), z > 0");
  constexpr double ERRTOL = 0.0015;
  constexpr double C1 = 3.0 / 14.0, C2 = 1.0 / 6.0, C3 = 9.0 / 22.0, C4 = 3.0 / 26.0;
  constexpr double C5 = 0.25 * C3, C6 = 1.5 * C4;
  double xt = x, yt = y, zt = z;
  double sum = 0.0, fac = 1.0;
  double ave = 0.0, delx = 0.0, dely = 0.0, delz = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lam = sx * (sy + sz) + sy * sz;
    sum += fac / (sz * (zt + lam));
    fac *= 0.25;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    zt = 0.25 * (zt + lam);
    ave = 0.2 * (xt + yt + 3.0 * zt);
    delx = (ave - xt) / ave;
    dely = (ave - yt) / ave;
    delz = (ave - zt) / ave;
    if (std::max({std::fabs(delx), std::fabs(dely), std::fabs(delz)}) <= ERRTOL) break;
  }
  const double ea = delx * dely;
  const double eb = delz * delz;
  const double ec = ea - eb;
  const double ed = ea - 6.0 * eb;
  const double ee = ed + ec + ec;
  return 3.0 * sum +
         fac *
             (1.0 + ed * (-C1 + C5 * ed - C6 * delz * ee) +
              delz * (C2 * ee + delz * (-C3 * ec + delz * C4 * ea))) /
             (ave * std::sqrt(ave));
}

double carlson_rj(double x, double y, double z, double p) {
  if (x < 0.0 || y < 0.0 || z < 0.0 || p <= 0.0 ||
      (x + y) == 0.0 || (y + z) == 0.0 || (z + x) == 0.0)
    throw std::invalid_argument("carlson_rj: requires x, y, z >= 0 (at most one zero), p > 0");
  constexpr double ERRTOL = 0.0015;
  constexpr double C1 = 3.0 / 14.0, C2 = 1.0 / 3.0, C3 = 3.0 / 22.0, C4 = 3.0 / 26.0;
  constexpr double C5 = 0.75 * C3, C6 = 1.5 * C4, C7 = 0.5 * C2, C8 = C3 + C3;
  double xt = x, yt = y, zt = z, pt = p;
  double sum = 0.0, fac = 1.0;
  double ave = 0.0, delx = 0.0, dely = 0.0, delz = 0.0, delp = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lam = sx * (sy + sz) + sy * sz;
    const double alpha_root = pt * (sx + sy + sz) + sx * sy * sz;
    const double alpha = alpha_root * alpha_root;
    const double beta = pt * (pt + lam) * (pt + lam);
    sum += fac * carlson_rc(alpha, beta);
    fac *= 0.25;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    zt = 0.25 * (zt + lam);
    pt = 0.25 * (pt + lam);
    ave = 0.2 * (xt + yt + zt + pt + pt);
    delx = (ave - xt) / ave;
    dely = (ave - yt) / ave;
    delz = (ave - zt) / ave;
    delp = (ave - pt) / ave;
    if (std::max({std::fabs(delx), std::fabs(dely), std::fabs(delz), std::fabs(delp)}) <=
        ERRTOL)
      break;
  }
  const double ea = delx * (dely + delz) + dely * delz;
  const double eb = delx * dely * delz;
  const double ec = delp * delp;
  const double ed = ea - 3.0 * ec;
  const double ee = eb + 2.0 * delp * (ea - ec);
  return 3.0 * sum +
         fac *
             (1.0 + ed * (-C1 + C5 * ed - C6 * ee) + eb * (C7 + delp * (-C8 + delp * C4)) +
              delp * ea * (C2 - delp * C3) - C2 * delp * ec) /
             (ave * std::sqrt(ave));
}

double ellip_f(double xi, double k) {
  if (xi == 0.0) return 0.0;
  const double s = std::sin(xi);
  const double c2 = 1.0 - s * s;
  const double q = 1.0 - k * k * s * s;
  return s * carlson_rf(c2, q, 1.0);
}

double ellip_e(double xi, double k) {
  if (xi == 0.0) return 0.0;
  const double s = std::sin(xi);
  const double c2 = 1.0 - s * s;
  const double q = 1.0 - k * k * s * s;
  // E = F - (k^2/3) sin^3 xi R_D: exact identity, cancellation-free for k < 1.
  return s * carlson_rf(c2, q, 1.0) - (k * k / 3.0) * s * s * s * carlson_rd(c2, q, 1.0);
}

double ellip_pi(double xi, double n, double k) {
  if (xi == 0.0) return 0.0;
  const double s = std::sin(xi);
  const double c2 = 1.0 - s * s;
  const double q = 1.0 - k * k * s * s;
  const double p = 1.0 - n * s * s;
  if (!(p > 0.0)) throw std::invalid_argument("ellip_pi: requires n sin^2 xi < 1");
  double value = s * carlson_rf(c2, q, 1.0);
  if (n != 0.0) value += (n / 3.0) * s * s * s * carlson_rj(c2, q, 1.0, p);
  return value;
}

}  // namespace geodint
