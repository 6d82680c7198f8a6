#include "braidcalc/scalar.hpp"

#include <cmath>
#include <memory>
#include <numeric>
#include <sstream>

#include "braidcalc/errors.hpp"

namespace braidcalc {

namespace {

constexpr int kMaxConductor = 2048;

struct CycloField {
  int n = 1;
  int phi = 1;
  // xpow[e] = x^e mod Phi_n for 0 <= e < n
  std::vector<std::vector<Rational>> xpow;
};

std::vector<long long> poly_div_exact(std::vector<long long> num, const std::vector<long long>& den) {
  // den monic
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  std::vector<long long> q(nn - dn + 1, 0);
  for (int k = nn - dn; k >= 0; --k) {
    long long c = num[k + dn];
    q[k] = c;
    for (int i = 0; i <= dn; ++i) num[k + i] -= c * den[i];
  }
  return q;
}

CycloField build_field(int n) {
  CycloField f;
  f.n = n;
  std::vector<long long> phi_poly = cyclotomic_polynomial(n);
  f.phi = static_cast<int>(phi_poly.size()) - 1;
  f.xpow.resize(n);
  std::vector<Rational> cur(f.phi);
  cur[0] = Rational(1);
  for (int e = 0; e < n; ++e) {
    f.xpow[e] = cur;
    // multiply by x: shift, reduce the overflowing top coefficient
    Rational top = cur[f.phi - 1];
    for (int i = f.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = Rational(0);
    if (!top.is_zero())
      for (int i = 0; i < f.phi; ++i) cur[i] -= top * Rational(phi_poly[i]);
  }
  return f;
}

const CycloField& field(int n) {
  if (n < 1 || n > kMaxConductor) throw Error("conductor out of supported range: " + std::to_string(n));
  thread_local std::vector<std::unique_ptr<CycloField>> cache(kMaxConductor + 1);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<CycloField>(build_field(n));
  return *slot;
}

// reduce an unreduced coefficient vector (degree < 2*phi or anything) mod Phi_n
Scalar::Coeffs reduce(int n, const std::vector<Rational>& raw) {
  const CycloField& f = field(n);
  Scalar::Coeffs out(f.phi);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k].is_zero()) continue;
    if (static_cast<int>(k) < f.phi) {
      out[k] += raw[k];
      continue;
    }
    const auto& xp = f.xpow[k % n];
    for (int i = 0; i < f.phi; ++i)
      if (!xp[i].is_zero()) out[i] += raw[k] * xp[i];
  }
  return out;
}

}  // namespace

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<long long> cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for all proper divisors d
  std::vector<long long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  return p;
}

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

Scalar::Scalar(int n, const std::vector<Rational>& c) : n_(n), c_(reduce(n, c)) {}

Scalar Scalar::zeta(int n, long long k) {
  long long e = ((k % n) + n) % n;
  const CycloField& f = field(n);
  Scalar s;
  s.n_ = n;
  s.c_.assign(f.xpow[e].begin(), f.xpow[e].end());
  return s;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Scalar Scalar::promote(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw Error("promote: conductor " + std::to_string(m) + " is not a multiple of " + std::to_string(n_));
  const CycloField& f = field(m);
  int step = m / n_;
  Scalar s;
  s.n_ = m;
  s.c_.assign(f.phi, Rational());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const auto& xp = f.xpow[(i * step) % m];
    for (int k = 0; k < f.phi; ++k)
      if (!xp[k].is_zero()) s.c_[k] += c_[i] * xp[k];
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.n_ != b.n_) {
    int m = lcm_conductor(a.n_, b.n_);
    return a.promote(m) + b.promote(m);
  }
  Scalar s = a;
  for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] += b.c_[i];
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar& Scalar::operator+=(const Scalar& b) {
  if (n_ != b.n_) return *this = *this + b;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.n_ != b.n_) {
    int m = lcm_conductor(a.n_, b.n_);
    return a.promote(m) * b.promote(m);
  }
  if (a.c_.size() == 1) {
    Scalar s;
    s.n_ = a.n_;
    s.c_[0] = a.c_[0] * b.c_[0];
    return s;
  }
  std::size_t phi = a.c_.size();
  std::vector<Rational> raw(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (!b.c_[j].is_zero()) raw[i + j] += a.c_[i] * b.c_[j];
  }
  Scalar s;
  s.n_ = a.n_;
  s.c_ = reduce(a.n_, raw);
  return s;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.n_ == n_ && b.n_ == n_ && c_.size() == 1) {
    if (!a.c_[0].is_zero() && !b.c_[0].is_zero()) c_[0] += a.c_[0] * b.c_[0];
    return;
  }
  *this += a * b;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (c_.size() == 1) {
    Scalar s;
    s.n_ = n_;
    s.c_[0] = c_[0].inv();
    return s;
  }
  // Solve (multiplication-by-this) y = 1 over Q.
  int phi = static_cast<int>(c_.size());
  std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    Scalar col = *this * zeta(n_, j);
    for (int i = 0; i < phi; ++i) a[i][j] = col.c_[i];
  }
  a[0][phi] = Rational(1);
  for (int c = 0; c < phi; ++c) {
    int piv = -1;
    for (int r = c; r < phi; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw DivisionByZero();
    std::swap(a[c], a[piv]);
    Rational iv = a[c][c].inv();
    for (int k = c; k <= phi; ++k) a[c][k] *= iv;
    for (int r = 0; r < phi; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (int k = c; k <= phi; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Scalar s;
  s.n_ = n_;
  s.c_.resize(phi);
  for (int i = 0; i < phi; ++i) s.c_[i] = a[i][phi];
  return s;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r = Scalar(1).promote(n_);
  Scalar b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.n_ != b.n_) {
    int m = lcm_conductor(a.n_, b.n_);
    return a.promote(m).c_ == b.promote(m).c_;
  }
  return a.c_ == b.c_;
}

std::complex<double> Scalar::to_complex() const {
  std::complex<double> z = 0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t k = 0; k < c_.size(); ++k)
    z += c_[k].to_double() * std::polar(1.0, two_pi * static_cast<double>(k) / n_);
  return z;
}

std::string Scalar::str() const {
  if (c_.size() == 1) return c_[0].str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k].str();
    if (k > 0) os << "*z" << n_ << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace braidcalc
