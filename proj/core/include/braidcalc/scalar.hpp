#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "braidcalc/rational.hpp"

namespace braidcalc {

// Element of the cyclotomic field Q(zeta_n), stored in the power basis
// 1, z, ..., z^(phi(n)-1) reduced modulo the n-th cyclotomic polynomial.
class Scalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  Scalar() : n_(1), c_(1) {}
  Scalar(long long v) : n_(1), c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : n_(1) { c_.push_back(std::move(r)); }  // NOLINT(google-explicit-constructor)
  // Reduces c modulo Phi_n; c may be longer than phi(n).
  Scalar(int n, const std::vector<Rational>& c);

  static Scalar zeta(int n, long long k = 1);
  static Scalar ratio(long long p, long long q) { return Scalar(Rational(p, q)); }

  int conductor() const { return n_; }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  bool is_rational() const;

  // Embedding into Q(zeta_m); m must be a multiple of the conductor.
  Scalar promote(int m) const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  // this += a*b
  void add_product(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  int n_;
  Coeffs c_;
};

int euler_phi(int n);
// Coefficients of Phi_n, lowest degree first, monic.
std::vector<long long> cyclotomic_polynomial(int n);
int lcm_conductor(int a, int b);

}  // namespace braidcalc
