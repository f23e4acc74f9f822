/// @file kappa.cpp
/// @brief Exact rational arithmetic for the series coefficients kappa_{s,k}.

#include "geodint/kappa.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace geodint {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

double Rational::to_double() const {
  // num and den convert exactly for every value this library produces (the
  // normalized kappa denominators are powers of two well below 2^53); the
  // IEEE division then performs the single final rounding.
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational binom_int(long long n, int k) {
  if (k < 0) throw std::invalid_argument("binom_int: k >= 0 required");
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= BigInt(n - i);
    den *= BigInt(i + 1);
  }
  return Rational(num, den);
}

Rational binom_mhalf(int k) {
  // C(-1/2, k) = (-1)^k C(2k, k) / 4^k
  Rational c2kk = binom_int(2LL * k, k);
  BigInt four_k = BigInt(1) << (2 * k);
  Rational r(c2kk.num(), four_k);  // C(2k,k) is an integer, so den() == 1
  return (k % 2 == 0) ? r : -r;
}

Rational jacobi_p_zero(int n, int alpha, int beta) {
  if (n < 0) throw std::invalid_argument("jacobi_p_zero: n >= 0 required");
  Rational sum(0);
  for (int m = 0; m <= n; ++m) {
    Rational term = binom_int(n + alpha, n - m) * binom_int(n + beta, m);
    sum = (m % 2 == 0) ? sum + term : sum - term;
  }
  return Rational(sum.num(), sum.den() * (BigInt(1) << n));
}

Rational kappa_direct(int s, int k) {
  if (s < 0 || k < 0 || k > s) throw std::invalid_argument("kappa: need 0 <= k <= s");
  const int lmax = std::min(2 * k, s);
  Rational inner(0);
  for (int l = k; l <= lmax; ++l) {
    // C(k, l-k) (-1/2)^l
    Rational t(binom_int(k, l - k).num(), BigInt(1) << l);
    inner = (l % 2 == 0) ? inner + t : inner - t;
  }
  Rational four_k(BigInt(1) << (2 * k), BigInt(1));
  return four_k * binom_mhalf(k) * inner;
}

Rational kappa_jacobi(int s, int k) {
  if (s < 0 || k < 0 || k > s) throw std::invalid_argument("kappa: need 0 <= k <= s");
  const Rational bmh = binom_mhalf(k);
  Rational value = (k % 2 == 0) ? bmh : -bmh;  // (-1)^k C(-1/2, k)
  const int n = 2 * k - s - 1;                 // degree of the correction polynomial
  if (n >= 0) {
    Rational p = jacobi_p_zero(n, 1 + s - k, -k);
    Rational pow2(BigInt(1) << n, BigInt(1));  // 2^{2k-s-1}, n >= 0 here
    Rational corr = pow2 * bmh * p;
    value = (s % 2 == 0) ? value + corr : value - corr;
  }
  return value;
}

KappaTable kappa_table(int smax) {
  if (smax < 0) throw std::invalid_argument("kappa_table: smax >= 0 required");
  KappaTable t;
  t.smax = smax;
  t.rows.resize(smax + 1);
  for (int s = 0; s <= smax; ++s) {
    t.rows[s].reserve(s + 1);
    for (int k = 0; k <= s; ++k) t.rows[s].push_back(kappa_direct(s, k));
  }
  return t;
}

std::vector<std::vector<double>> kappa_table_doubles(int smax) {
  KappaTable t = kappa_table(smax);
  std::vector<std::vector<double>> d(t.rows.size());
  for (std::size_t s = 0; s < t.rows.size(); ++s) {
    d[s].reserve(t.rows[s].size());
    for (const Rational& r : t.rows[s]) d[s].push_back(r.to_double());
  }
  return d;
}

}  // namespace geodint
