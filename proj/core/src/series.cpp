#include "geodint/series.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "geodint/elementary.hpp"
#include "geodint/elliptic_family.hpp"
#include "geodint/kappa.hpp"
#include "geodint/special_values.hpp"

namespace geodint {

namespace {

[[noreturn]] void fail_member(int beta2, int k) {
  throw UnsupportedIndexError("no evaluation path for member (2*beta=" +
                              std::to_string(beta2) +
                              ", k=" + std::to_string(k) + ")");
}

/// Weights of the S_alpha series, w_{s,k} = C(-1/2,k) C(k,s-k) 2^{2k-s},
/// nonzero only for ceil(s/2) <= k <= s (2k-s >= 0 there, so the power of two
/// is integral). Dyadic rationals, computed exactly and rounded once.
std::vector<std::vector<double>> s_weight_table(int smax) {
  std::vector<std::vector<double>> w(static_cast<std::size_t>(smax) + 1);
  for (int s = 0; s <= smax; ++s) {
    auto& row = w[static_cast<std::size_t>(s)];
    row.assign(static_cast<std::size_t>(s) + 1, 0.0);
    for (int k = (s + 1) / 2; k <= s; ++k) {
      const Rational pow2(BigInt(1) << (2 * k - s), 1);
      row[static_cast<std::size_t>(k)] =
          (binom_mhalf(k) * binom_int(k, s - k) * pow2).to_double();
    }
  }
  return w;
}

/// Orders whose h-power underflows to exactly zero are not retained, so at
/// h = 0 every series is the single s = 0 term.
IntegralResult finish(std::vector<double> terms) {
  IntegralResult r;
  r.value = std::accumulate(terms.begin(), terms.end(), 0.0);
  r.trunc_estimate = std::abs(terms.back());
  r.orders_used = static_cast<int>(terms.size()) - 1;
  r.convergence_warning =
      terms.size() >= 2 && terms.front() != 0.0 &&
      std::abs(terms.back()) > kWarnRatio * std::abs(terms.front());
  r.terms = std::move(terms);
  return r;
}

/// Per-order accumulation of the derivative correction
///   D_alpha = sum_s (-h)^s sum_k (2k+1) kappa_{s,k}
///             [ delta(alpha+s/2, k+1) - delta(alpha+s/2, k) ],
/// which equals c * d(I_alpha)/dc with the 1/c of the member derivative
/// already cancelled.
std::vector<double> d_alpha_terms(int alpha2, double h, int order,
                                  MemberTable& table) {
  const auto kap = kappa_table_doubles(order);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(order) + 1);
  double hp = 1.0;
  for (int s = 0; s <= order; ++s) {
    if (s > 0) {
      hp *= -h;
      if (hp == 0.0) break;
    }
    double sum = 0.0;
    for (int k = 0; k <= s; ++k) {
      const double dk1 = table.delta(alpha2 + s, k + 1);
      const double dk0 = table.delta(alpha2 + s, k);
      sum += (2 * k + 1) * kap[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] *
             (dk1 - dk0);
    }
    terms.push_back(hp * sum);
  }
  return terms;
}

}  // namespace

double member(int beta2, int k, double tau, const FamilyContext& ctx) {
  if (k < 0) fail_member(beta2, k);
  if (beta2 % 2 == 0) {
    const int beta = beta2 / 2;
    if (beta >= 0) return i_int(beta, k, tau, ctx);
    if (beta == -1 && k == 0) return i_m1_0(tau, ctx);
    if (beta == -1 && k == 1) return i_m1_1(tau, ctx);
  } else {
    if (beta2 >= -1) return i_halfint(beta2, k, tau, ctx);
    if (beta2 == -3 && k == 0) return i_m32_0(tau, ctx);
  }
  fail_member(beta2, k);
}

MemberTable::MemberTable(const FamilyContext& ctx, double tau0, double tau1)
    : ctx_(ctx), tau0_(tau0), tau1_(tau1) {}

double MemberTable::delta(int beta2, int k) {
  const auto key = std::make_pair(beta2, k);
  const auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const double value =
      member(beta2, k, tau1_, ctx_) - member(beta2, k, tau0_, ctx_);
  cache_.emplace(key, value);
  return value;
}

IntegralResult i_alpha_series(int alpha2, double h, int order,
                              MemberTable& table) {
  const auto kap = kappa_table_doubles(order);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(order) + 1);
  double hp = 1.0;  // (-h)^s
  for (int s = 0; s <= order; ++s) {
    if (s > 0) {
      hp *= -h;
      if (hp == 0.0) break;  // h = 0: every higher order vanishes identically
    }
    double sum = 0.0;
    for (int k = 0; k <= s; ++k) {
      sum += kap[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] *
             table.delta(alpha2 + s, k);
    }
    terms.push_back(hp * sum);
  }
  return finish(std::move(terms));
}

IntegralResult s_alpha_series(int alpha2, double h, int order,
                              MemberTable& table) {
  const auto w = s_weight_table(order);
  const double a = table.ctx().bp.a;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(order) + 1);
  double hp = 1.0;  // h^s
  for (int s = 0; s <= order; ++s) {
    if (s > 0) {
      hp *= h;
      if (hp == 0.0) break;
    }
    double sum = 0.0;
    for (int k = (s + 1) / 2; k <= s; ++k) {
      const double pair = (1.0 - a) * table.delta(alpha2 + s, k) +
                          a * table.delta(alpha2 + 2 + s, k);
      sum += w[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] * pair;
    }
    terms.push_back(hp * sum);
  }
  return finish(std::move(terms));
}

IntegralResult longitude_integral(const Ellipsoid& ell,
                                  const GeodesicSpec& spec) {
  validate_domain(ell, spec);
  const FamilyContext ctx = make_context(ell.e, spec.c);
  MemberTable table(ctx, spec.tau0, spec.tau1);
  const IntegralResult r1 = i_alpha_series(2, spec.h, spec.order, table);
  const IntegralResult rm = i_alpha_series(-1, spec.h, spec.order, table);

  const double ome2 = 1.0 - ell.e * ell.e;
  std::vector<double> terms(r1.terms.size(), 0.0);  // both series share h
  for (std::size_t s = 0; s < terms.size(); ++s) {
    terms[s] = spec.c * (spec.h * r1.terms[s] + ome2 * rm.terms[s]);
  }
  return finish(std::move(terms));
}

IntegralResult distance_integral(const Ellipsoid& ell,
                                 const GeodesicSpec& spec) {
  validate_domain(ell, spec);
  const FamilyContext ctx = make_context(ell.e, spec.c);
  MemberTable table(ctx, spec.tau0, spec.tau1);

  const double ome2 = 1.0 - ell.e * ell.e;
  const double h = spec.h;
  struct Piece {
    int alpha2;
    double coef;
  };
  const Piece pieces[] = {
      {0, h}, {1, h * h}, {-3, ome2}, {-2, h * ome2}};

  std::vector<double> terms;
  for (const Piece& p : pieces) {
    if (p.coef == 0.0) continue;  // h = 0 drops three of the four pieces
    const IntegralResult r = s_alpha_series(p.alpha2, h, spec.order, table);
    if (terms.size() < r.terms.size()) terms.resize(r.terms.size(), 0.0);
    for (std::size_t s = 0; s < r.terms.size(); ++s) {
      terms[s] += p.coef * r.terms[s];
    }
  }
  return finish(std::move(terms));
}

IntegralResult dlongitude_dc(const Ellipsoid& ell, const GeodesicSpec& spec) {
  validate_domain(ell, spec);
  const FamilyContext ctx = make_context(ell.e, spec.c);
  MemberTable table(ctx, spec.tau0, spec.tau1);

  const IntegralResult r1 = i_alpha_series(2, spec.h, spec.order, table);
  const IntegralResult rm = i_alpha_series(-1, spec.h, spec.order, table);
  const std::vector<double> d1 = d_alpha_terms(2, spec.h, spec.order, table);
  const std::vector<double> dm = d_alpha_terms(-1, spec.h, spec.order, table);

  const double ome2 = 1.0 - ell.e * ell.e;
  std::vector<double> terms(r1.terms.size(), 0.0);  // all four share h
  for (std::size_t s = 0; s < terms.size(); ++s) {
    terms[s] = spec.h * (r1.terms[s] + d1[s]) + ome2 * (rm.terms[s] + dm[s]);
  }
  return finish(std::move(terms));
}

}  // namespace geodint
