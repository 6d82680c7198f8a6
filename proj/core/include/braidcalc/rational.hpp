#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace braidcalc {

// Exact rational. Values whose numerator and denominator fit in int64 are kept
// inline; everything else lives in an mpq_class. The representation is
// canonical: a value is stored big only if it does not fit the small form.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n == INT64_MIN) set_big(mpq_class(mpz_class(std::to_string(n))));
  }
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q) { set_big(q); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  static Rational parse(const std::string& s);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const;

  mpq_class to_mpq() const;
  std::string num_str() const;
  std::string den_str() const;
  std::string str() const;
  double to_double() const;
  // Small numerator/denominator; only valid when is_small().
  long long small_num() const { return num_; }
  long long small_den() const { return den_; }

  Rational operator-() const;
  Rational inv() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b);
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  void set_big(const mpq_class& q);
  static Rational from_i128(__int128 n, __int128 d);

  long long num_ = 0;
  long long den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace braidcalc
