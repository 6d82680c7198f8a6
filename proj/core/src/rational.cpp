#include "braidcalc/rational.hpp"

#include <limits>
#include <stdexcept>

#include "braidcalc/errors.hpp"

namespace braidcalc {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long gcd64(long long a, long long b) {
  unsigned long long x = a < 0 ? 0ULL - static_cast<unsigned long long>(a) : a;
  unsigned long long y = b < 0 ? 0ULL - static_cast<unsigned long long>(b) : b;
  while (y != 0) {
    unsigned long long t = x % y;
    x = y;
    y = t;
  }
  return static_cast<long long>(x);
}

bool fits(i128 v) {
  return v <= std::numeric_limits<long long>::max() && v >= -std::numeric_limits<long long>::max();
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<unsigned long long>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<unsigned long long>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw DivisionByZero();
  *this = from_i128(n, d);
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d == 0) throw DivisionByZero();
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<long long>(n);
    r.den_ = n == 0 ? 1 : static_cast<long long>(d);
  } else {
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    r.set_big(q);
  }
  return r;
}

void Rational::set_big(const mpq_class& q0) {
  mpq_class q(q0);
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  // exact boundary check for values near 2^63
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r;
  r.set_big(q);
  return r;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(std::to_string(num_)), mpz_class(std::to_string(den_)));
  return q;
}

std::string Rational::num_str() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }
std::string Rational::den_str() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) return Rational(mpq_class(1 / *big_));
  return from_i128(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      long long s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != std::numeric_limits<long long>::min()) {
        Rational r;
        r.num_ = s;
        return r;
      }
    }
    using i128 = __int128;
    if (a.den_ == b.den_) return Rational::from_i128(static_cast<i128>(a.num_) + b.num_, a.den_);
    return Rational::from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational& Rational::operator+=(const Rational& b) {
  if (!big_ && !b.big_ && den_ == 1 && b.den_ == 1) {
    long long s;
    if (!__builtin_add_overflow(num_, b.num_, &s) && s != std::numeric_limits<long long>::min()) {
      num_ = s;
      return *this;
    }
  }
  return *this = *this + b;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      long long p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != std::numeric_limits<long long>::min()) {
        Rational r;
        r.num_ = p;
        return r;
      }
    }
    // cross-cancel first so the 128-bit products stay reduced
    long long g1 = gcd64(a.num_, b.den_);
    long long g2 = gcd64(b.num_, a.den_);
    using i128 = __int128;
    i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a small value never equals a big one
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    using i128 = __int128;
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

}  // namespace braidcalc
