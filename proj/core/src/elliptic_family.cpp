/// @file elliptic_family.cpp
/// @brief D/A ladders and the half-integer member assembly.

#include "geodint/elliptic_family.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace geodint {

namespace {

double binom_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

[[noreturn]] void fail_index(const char* fn, int beta2, int k) {
  std::ostringstream os;
  os << fn << ": unsupported member index (2*beta = " << beta2 << ", k = " << k << ")";
  throw UnsupportedIndexError(os.str());
}

}  // namespace

Amplitude amplitude(double tau, const BranchParams& bp) {
  Amplitude amp;
  const double s = std::min(1.0, std::fabs(tau) / bp.b);
  amp.xi = std::asin(s);
  amp.k = bp.modulus;
  amp.n = bp.b * bp.b;
  return amp;
}

DTable::DTable(int v_min, std::vector<double> k_values, double A, double b2)
    : v_min_(v_min), k_(std::move(k_values)), A_(A), b2_(b2) {}

double DTable::d(int v) const { return k(v) * A_ * std::pow(b2_, v); }

DTable d_seq(int v_min, int v_max, double tau, const FamilyContext& ctx) {
  if (v_min > v_max) throw UnsupportedIndexError("d_seq: v_min > v_max");
  const double t = std::fabs(tau);
  const double A = 1.0 / ctx.e;
  const double A2 = A * A;
  const double b = ctx.bp.b;
  const double b2 = b * b;
  if (!(t < b)) throw DomainError("d_seq: requires |tau| < b");

  const Amplitude amp = amplitude(t, ctx.bp);
  const double s = std::sin(amp.xi), c2 = 1.0 - s * s, q = 1.0 - amp.k * amp.k * s * s;
  const double F = ellip_f(amp.xi, amp.k);
  const double E = ellip_e(amp.xi, amp.k);

  // Seeds (each verified by differentiation):
  //   K_0 = F/A
  //   K_1 = D_2/(A b^2),  D_2 = F + A^2/(A^2-b^2) [ (t/A) sqrt((A^2-t^2)/(b^2-t^2)) - E ]
  //   K_{-1} = b^2 D_{-2}/A,  D_{-2} = F - (sin^3 xi / 3) R_D(cos^2 xi, 1-k^2 sin^2 xi, 1)
  // (D_{-2} is the cancellation-free equivalent of (A^2 E - (A^2-b^2) F)/b^2.)
  const double k0 = F / A;
  double k1 = 0.0;
  if (v_max >= 1) {
    const double d2 =
        F + A2 / (A2 - b2) * ((t / A) * std::sqrt((A2 - t * t) / (b2 - t * t)) - E);
    k1 = d2 / (A * b2);
  }
  double km1 = 0.0;
  if (v_min <= -1) {
    const double dm2 = (s == 0.0) ? 0.0 : F - (s * s * s / 3.0) * carlson_rd(c2, q, 1.0);
    km1 = b2 * dm2 / A;
  }

  std::vector<double> kv(static_cast<std::size_t>(v_max - v_min + 1), 0.0);
  auto set = [&](int v, double val) { kv[static_cast<std::size_t>(v - v_min)] = val; };
  if (0 >= v_min && 0 <= v_max) set(0, k0);
  if (1 >= v_min && 1 <= v_max) set(1, k1);
  if (-1 >= v_min && -1 <= v_max) set(-1, km1);

  // Boundary of the three-term recurrence:
  //   (2v+1)(A^2-b^2) b^2 K_{v+1} = (2v-1) K_{v-1} + 2v (A^2-2b^2) K_v + g_v,
  //   g_v = t sqrt(A^2-t^2) (b^2-t^2)^{-v-1/2} = g_0 (b^2-t^2)^{-v}.
  const double g0 = t * std::sqrt((A2 - t * t) / (b2 - t * t));
  const double ratio = 1.0 / (b2 - t * t);
  auto gv = [&](int v) { return g0 * std::pow(ratio, v); };

  double prev = k0, cur = k1;  // K_{v-1}, K_v while walking up
  for (int v = 1; v + 1 <= v_max; ++v) {
    const double next =
        ((2.0 * v - 1.0) * prev + 2.0 * v * (A2 - 2.0 * b2) * cur + gv(v)) /
        ((2.0 * v + 1.0) * (A2 - b2) * b2);
    set(v + 1, next);
    prev = cur;
    cur = next;
  }
  double nxt = k0;  // K_{v+1}, K_v while walking down
  cur = km1;
  for (int v = -1; v - 1 >= v_min; --v) {
    const double below =
        ((2.0 * v + 1.0) * (A2 - b2) * b2 * nxt - 2.0 * v * (A2 - 2.0 * b2) * cur - gv(v)) /
        (2.0 * v - 1.0);
    set(v - 1, below);
    nxt = cur;
    cur = below;
  }
  return DTable(v_min, std::move(kv), A, b2);
}

std::vector<double> a_seq(int l_max, double tau, const FamilyContext& ctx) {
  const double t = std::fabs(tau);
  const double b = ctx.bp.b;
  if (!(t < b)) throw DomainError("a_seq: requires |tau| < b");
  const double A2 = ctx.bp.a;
  const double b2 = b * b;
  const double x = t * t;

  // P_l = A integral_0^t u^{2l} du / sqrt((A^2-u^2)(b^2-u^2)), summed as the
  // all-positive double binomial expansion
  //   P_l = (t^{2l+1}/b) sum_q e_q x^q / (2l+2q+1),
  //   e_q = sum_{m+n=q} c_m c_n A^{-2m} b^{-2n},   c_m = binom(2m,m)/4^m.
  // A Wallis ladder on the sigma moments would be cheaper, but its upward
  // step subtracts nearly equal quantities and loses ~(b/t)^2 in relative
  // accuracy per rung — fatal for l >= 2 at small t.  This series is
  // uniformly stable; the term ratio (t/b)^2 stays below (1-margin)^2.
  std::vector<double> am{1.0}, bn{1.0};  // c_m A^{-2m} and c_n b^{-2n}
  std::vector<double> sums(static_cast<std::size_t>(l_max) + 1, 0.0);
  const double ratio = x / b2;
  double xq = 1.0;  // x^q
  for (int q = 0; q < 100000; ++q) {
    double eq = 0.0;
    for (int m = 0; m <= q; ++m) {
      eq += am[static_cast<std::size_t>(m)] * bn[static_cast<std::size_t>(q - m)];
    }
    const double r = eq * xq;
    for (int l = 0; l <= l_max; ++l) {
      sums[static_cast<std::size_t>(l)] += r / (2.0 * (l + q) + 1.0);
    }
    // Positive terms with ratio < 1: the remaining tail of the slowest sum
    // (l = l_max, where late terms weigh the most) is below
    // r * ratio / ((1 - ratio)(2 l_max + 2q + 1)).
    if (r <= 0.5e-16 * (1.0 - ratio) * (2.0 * (l_max + q) + 1.0) *
                 sums[static_cast<std::size_t>(l_max)]) {
      break;
    }
    const double grow = (2.0 * q + 1.0) / (2.0 * q + 2.0);
    am.push_back(am.back() * grow / A2);
    bn.push_back(bn.back() * grow / b2);
    xq *= x;
  }

  std::vector<double> out(static_cast<std::size_t>(l_max) + 1);
  double tp = t;  // t^{2l+1}
  for (int l = 0; l <= l_max; ++l) {
    out[static_cast<std::size_t>(l)] = tp * sums[static_cast<std::size_t>(l)] / b;
    tp *= x;
  }
  return out;
}

double jbar_halfint(int beta2, int k, double tau, const FamilyContext& ctx) {
  if (beta2 % 2 == 0 || beta2 < -1 || k < 1) fail_index("jbar_halfint", beta2, k);
  const int nb = (beta2 + 1) / 2;  // beta + 1/2
  const double t = std::fabs(tau);
  const double sign = (tau < 0.0) ? -1.0 : 1.0;
  const double A = 1.0 / ctx.e;
  const double A2 = A * A;
  const double b2 = ctx.bp.b * ctx.bp.b;

  // v = 1 + s - (nb - m) ranges over [1-nb, k]; negative v enters for beta >= 3/2.
  DTable dt = d_seq(1 - nb, k, t, ctx);

  double sum = 0.0;
  for (int s = 0; s <= k - 1; ++s) {
    const double ws = binom_d(k - 1, s) * std::pow(1.0 - b2, s);
    for (int m = 0; m <= nb; ++m) {
      const int v = 1 + s - (nb - m);
      sum += ws * binom_d(nb, m) * std::pow(A2 - b2, m) * dt.k(v);
    }
  }
  return sign * 2.0 * sum;
}

double jbar_beta0(int beta2, double tau, const FamilyContext& ctx) {
  if (beta2 % 2 == 0 || beta2 < -1) fail_index("jbar_beta0", beta2, 0);
  const int nb = (beta2 + 1) / 2;
  const double t = std::fabs(tau);
  const double sign = (tau < 0.0) ? -1.0 : 1.0;
  const double A = 1.0 / ctx.e;
  const double A2 = A * A;
  if (!(t < ctx.bp.b)) throw DomainError("jbar_beta0: requires |tau| < b");

  const Amplitude amp = amplitude(t, ctx.bp);
  const double pi3 = ellip_pi(amp.xi, amp.n, amp.k);
  std::vector<double> g = (nb >= 1) ? a_seq(nb - 1, t, ctx) : std::vector<double>{};

  double sum = 0.0;
  for (int m = 0; m <= nb; ++m) {
    double inner;
    if (m == 0) {
      inner = pi3;
    } else {
      // integral (1-t^2)^{m-1}/sqrt((A^2-t^2)(b^2-t^2)) dt
      //   = (1/A) sum_l C(m-1,l) (-1)^l b^{2l} A_{2l}
      inner = 0.0;
      for (int l = 0; l <= m - 1; ++l) {
        const double term = binom_d(m - 1, l) * g[static_cast<std::size_t>(l)];
        inner += (l % 2 == 0) ? term : -term;
      }
    }
    sum += binom_d(nb, m) * std::pow(A2 - 1.0, nb - m) * inner;
  }
  return sign * 2.0 * sum / A;
}

double i_halfint(int beta2, int k, double tau, const FamilyContext& ctx) {
  if (beta2 % 2 == 0 || beta2 < -1 || k < 0) fail_index("i_halfint", beta2, k);
  const double pref =
      std::pow(ctx.e, beta2) * std::pow(ctx.bp.prefactor_base, -(k + 0.5));
  const double jbar =
      (k == 0) ? jbar_beta0(beta2, tau, ctx) : jbar_halfint(beta2, k, tau, ctx);
  return pref * 0.5 * jbar;
}

}  // namespace geodint
