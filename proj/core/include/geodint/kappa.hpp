/// @file kappa.hpp
/// @brief Exact rational coefficients kappa_{s,k} of the altitude power series.
///
/// Expanding the reciprocal branch factor of the integrands in the scaled
/// altitude u = h sqrt(E),
///   1/((1+u) sqrt(1 + (2u+u^2) R)) = sum_s (-u)^s sum_{k=0}^{s} kappa_{s,k} R^k,
/// with R = T/(T - c^2 E), defines the triangular coefficient family
/// kappa_{s,k}. Each coefficient is a dyadic rational; they are computed here
/// in exact integer arithmetic and only converted to double at the end, so the
/// assembled series carries no coefficient rounding beyond one conversion.
///
/// Two independent closed forms are provided:
///  - kappa_direct: the defining double-binomial sum,
///  - kappa_jacobi: a two-term form whose correction term is a Jacobi
///    polynomial evaluated at zero and is absent when its degree 2k - s - 1
///    is negative.
/// The library uses kappa_direct; kappa_jacobi exists to cross-check it.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace geodint {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, normalized (den > 0, gcd(num, den) = 1).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  double to_double() const;
  std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

 private:
  BigInt num_;
  BigInt den_;
};

/// Generalized binomial coefficient C(n, k) for integer n (possibly negative),
/// k >= 0, via the falling-factorial product. Exact.
Rational binom_int(long long n, int k);

/// C(-1/2, k) = (-1)^k C(2k, k) / 4^k.
Rational binom_mhalf(int k);

/// Jacobi polynomial P_n^{(alpha,beta)}(0) for integer parameters:
///   2^{-n} sum_{m=0}^{n} C(n+alpha, n-m) C(n+beta, m) (-1)^m.
Rational jacobi_p_zero(int n, int alpha, int beta);

/// kappa_{s,k} from the defining sum
///   4^k C(-1/2, k) sum_{l=k}^{min(2k,s)} C(k, l-k) (-1/2)^l,   0 <= k <= s.
Rational kappa_direct(int s, int k);

/// kappa_{s,k} from the Jacobi-polynomial form
///   (-1)^k C(-1/2,k) + (-1)^s 2^{2k-s-1} C(-1/2,k) P_{2k-s-1}^{(1+s-k,-k)}(0),
/// where the second term is present only when its degree 2k-s-1 >= 0
/// (equivalently k > s/2).
Rational kappa_jacobi(int s, int k);

/// Triangular table kappa_{s,k} for s = 0..smax, k = 0..s.
struct KappaTable {
  int smax = 0;
  std::vector<std::vector<Rational>> rows;
  const Rational& at(int s, int k) const { return rows.at(s).at(k); }
};
KappaTable kappa_table(int smax);

/// The same table converted to double (one rounding per entry).
std::vector<std::vector<double>> kappa_table_doubles(int smax);

}  // namespace geodint
