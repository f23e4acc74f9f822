/// @file elementary.cpp
/// @brief Closed-form evaluation of the integer-beta family members.

#include "geodint/elementary.hpp"

#include <cmath>
#include <sstream>

namespace geodint {

namespace {

// C(n, k) for small nonnegative integers as double (exact through n = 60).
double binom_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

[[noreturn]] void fail_index(const char* fn, int beta, int k) {
  std::ostringstream os;
  os << fn << ": unsupported member index (beta = " << beta << ", k = " << k << ")";
  throw UnsupportedIndexError(os.str());
}

}  // namespace

double atan_over_root(double u, double y) {
  if (u == 0.0) return y;
  const double w2 = u * y * y;
  if (w2 < 1e-8) {
    // atan(y sqrt(u))/sqrt(u) = y (1 - w2/3 + w2^2/5 - ...), |error| < w2^3/7
    return y * (1.0 - w2 / 3.0 + w2 * w2 / 5.0);
  }
  const double r = std::sqrt(u);
  return std::atan(y * r) / r;
}

double antider_zpow(int t_exp, double coef, double z) {
  // w = sqrt(coef z - 1); clamp guards the lower limit z = 1/coef where the
  // product coef * (1/coef) may round to just below 1.
  const double w2 = std::max(coef * z - 1.0, 0.0);
  const double w = std::sqrt(w2);
  if (t_exp == 0) return 2.0 * w / coef;
  if (t_exp > 0) {
    // integral z^t / sqrt(coef z - 1) dz = (2/coef^{t+1}) integral (w^2+1)^t dw
    double sum = 0.0;
    double w2l = 1.0;  // w^{2l}
    for (int l = 0; l <= t_exp; ++l) {
      sum += binom_d(t_exp, l) * w2l / static_cast<double>(2 * l + 1);
      w2l *= w2;
    }
    return 2.0 * w * sum / std::pow(coef, t_exp + 1);
  }
  // t_exp < 0: (2 coef^{n-1}) integral dw/(1+w^2)^n with n = -t_exp, via the
  // standard reduction V_{j+1} = w/(2j (1+w^2)^j) + (2j-1)/(2j) V_j.
  const int n = -t_exp;
  const double one_w2 = 1.0 + w2;
  double v = std::atan(w);  // V_1
  double pow_1w2 = 1.0;     // (1+w^2)^j
  for (int j = 1; j < n; ++j) {
    pow_1w2 *= one_w2;
    v = w / (2.0 * j * pow_1w2) + (2.0 * j - 1.0) / (2.0 * j) * v;
  }
  return 2.0 * std::pow(coef, n - 1) * v;
}

std::vector<double> b_ladder(int i_max, double b, double tau) {
  std::vector<double> bs(static_cast<std::size_t>(i_max) + 1);
  const double b2 = b * b;
  const double q = b2 - tau * tau;
  // asin argument can round just past 1 when tau ~ b.
  bs[0] = std::asin(std::min(1.0, std::max(-1.0, tau / b)));
  double qpow = std::sqrt(std::max(q, 0.0));  // q^{i-1/2}
  for (int i = 1; i <= i_max; ++i) {
    bs[i] = tau * qpow / (2.0 * i) + (1.0 - 0.5 / i) * b2 * bs[i - 1];
    qpow *= q;
  }
  return bs;
}

double j_int(int beta, int k, double x, const FamilyContext& ctx) {
  if (beta < 0 || k < 1) fail_index("j_int", beta, k);
  const double b2 = ctx.bp.b * ctx.bp.b;
  const double A2 = ctx.bp.a;  // 1/e^2
  const double z = 1.0 / (b2 - x);
  const double z0 = 1.0 / b2;
  double sum = 0.0;
  double pow_s = 1.0;  // (1-b^2)^s
  for (int s = 0; s <= k - 1; ++s) {
    double pow_m = 1.0;  // (A^2-b^2)^m
    for (int m = 0; m <= beta; ++m) {
      const double weight = binom_d(k - 1, s) * pow_s * binom_d(beta, m) * pow_m;
      const int t = s + m - beta;
      sum += weight * (antider_zpow(t, b2, z) - antider_zpow(t, b2, z0));
      pow_m *= (A2 - b2);
    }
    pow_s *= (1.0 - b2);
  }
  return sum;
}

double j0k(int k, double x, const FamilyContext& ctx) {
  if (k < 1) fail_index("j0k", 0, k);
  const double b2 = ctx.bp.b * ctx.bp.b;
  const double ratio = (1.0 - b2) * x / (b2 - x);
  double sum = 0.0;
  double rpow = 1.0;
  for (int l = 0; l <= k - 1; ++l) {
    sum += binom_d(k - 1, l) * rpow / static_cast<double>(2 * l + 1);
    rpow *= ratio;
  }
  return 2.0 * std::sqrt(x) / (std::pow(b2, k) * std::sqrt(b2 - x)) * sum;
}

double i_beta0(int beta, double tau, const FamilyContext& ctx) {
  if (beta < 0) fail_index("i_beta0", beta, 0);
  const double t = std::fabs(tau);
  const double sign = (tau < 0.0) ? -1.0 : 1.0;
  const double e2 = ctx.e * ctx.e;
  const double b = ctx.bp.b;
  const double b2 = b * b;
  const double q = b2 - t * t;

  // G_0 = integral dt/((1-t^2) sqrt(b^2-t^2)), analytic through c -> 0 (b -> 1).
  const double g0 = atan_over_root(1.0 - b2, t / std::sqrt(q));

  // e^{2 beta}(A^2 - t^2)^beta = sum_l C(beta,l)(1-e^2)^{beta-l} e^{2l} (1-t^2)^l
  // merges the e powers exactly, keeping every weight O(1).
  std::vector<double> bs = b_ladder(std::max(0, beta - 1), b, t);
  double sum = 0.0;
  for (int l = 0; l <= beta; ++l) {
    double gl;
    if (l == 0) {
      gl = g0;
    } else {
      // G_l = sum_i C(l-1,i) (1-b^2)^{l-1-i} B_i
      gl = 0.0;
      for (int i = 0; i <= l - 1; ++i)
        gl += binom_d(l - 1, i) * std::pow(1.0 - b2, l - 1 - i) * bs[static_cast<std::size_t>(i)];
    }
    sum += binom_d(beta, l) * std::pow(1.0 - e2, beta - l) * std::pow(e2, l) * gl;
  }
  return sign * sum / std::sqrt(ctx.bp.prefactor_base);
}

double i_int(int beta, int k, double tau, const FamilyContext& ctx) {
  if (beta < 0 || k < 0) fail_index("i_int", beta, k);
  if (k == 0) return i_beta0(beta, tau, ctx);
  const double sign = (tau < 0.0) ? -1.0 : 1.0;
  const double x = tau * tau;
  const double pref =
      std::pow(ctx.e, 2 * beta) * std::pow(ctx.bp.prefactor_base, -(k + 0.5));
  const double j = (beta == 0) ? j0k(k, x, ctx) : j_int(beta, k, x, ctx);
  return sign * pref * 0.5 * j;
}

}  // namespace geodint
