#include "braidcalc/matrix.hpp"

#include <sstream>

#include "braidcalc/errors.hpp"

namespace braidcalc {

namespace {

Scalar zero_at(int n) { return n == 1 ? Scalar() : Scalar().promote(n); }

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor) {
  if (conductor == 1)
    e_.resize(rows * cols);
  else
    e_.assign(rows * cols, zero_at(conductor));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    for (const auto& s : r) conductor_ = lcm_conductor(conductor_, s.conductor());
  }
  for (const auto& r : rows)
    for (const auto& s : r) e_.push_back(s.promote(conductor_));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = Scalar(1);
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

Matrix Matrix::row(const std::vector<Scalar>& v) {
  Matrix m(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m.set(0, i, v[i]);
  return m;
}

Matrix Matrix::scalar(const Scalar& s) {
  Matrix m(1, 1, s.conductor());
  m.e_[0] = s;
  return m;
}

Matrix Matrix::unit_column(std::size_t n, std::size_t i) {
  Matrix m(n, 1);
  m.e_[i] = Scalar(1);
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s) {
  if (s.conductor() != conductor_) {
    int m = lcm_conductor(conductor_, s.conductor());
    if (m != conductor_) *this = promote(m);
    e_[i * cols_ + j] = s.promote(m);
    return;
  }
  e_[i * cols_ + j] = s;
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& s) {
  if (s.conductor() != conductor_) {
    int m = lcm_conductor(conductor_, s.conductor());
    if (m != conductor_) *this = promote(m);
    e_[i * cols_ + j] += s.promote(m);
    return;
  }
  e_[i * cols_ + j] += s;
}

Matrix Matrix::promote(int m) const {
  if (m == conductor_) return *this;
  Matrix r;
  r.rows_ = rows_;
  r.cols_ = cols_;
  r.conductor_ = m;
  r.e_.reserve(e_.size());
  Scalar z = zero_at(m);
  for (const auto& s : e_) r.e_.push_back(s.is_zero() ? z : s.promote(m));
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& s = e_[i * cols_ + j];
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& s : e_) n += !s.is_zero();
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, conductor_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = e_[i * cols_ + j];
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  Matrix b(nr, nc, conductor_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b.e_[i * nc + j] = e_[(r0 + i) * cols_ + c0 + j];
  return b;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& js) const {
  Matrix b(rows_, js.size(), conductor_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < js.size(); ++k) b.e_[i * js.size() + k] = e_[i * cols_ + js[k]];
  return b;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& is) const {
  Matrix b(is.size(), cols_, conductor_);
  for (std::size_t k = 0; k < is.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) b.e_[k * cols_ + j] = e_[is[k] * cols_ + j];
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("set_block out of range");
  int m = lcm_conductor(conductor_, b.conductor_);
  if (m != conductor_) *this = promote(m);
  Matrix bb = b.promote(m);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) e_[(r0 + i) * cols_ + c0 + j] = bb.e_[i * b.cols_ + j];
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& s : r.e_)
    if (!s.is_zero()) s = -s;
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  r += b;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeError("add: " + shape(*this) + " vs " + shape(b));
  int m = lcm_conductor(conductor_, b.conductor_);
  if (m != conductor_) *this = promote(m);
  if (b.conductor_ != m) return *this += b.promote(m);
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (!b.e_[k].is_zero()) e_[k] += b.e_[k];
  return *this;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Scalar& s, const Matrix& a) {
  int m = lcm_conductor(s.conductor(), a.conductor_);
  Matrix r = a.promote(m);
  Scalar sp = s.promote(m);
  for (auto& x : r.e_)
    if (!x.is_zero()) x = sp * x;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.conductor_ == b.conductor_) return a.e_ == b.e_;
  for (std::size_t k = 0; k < a.e_.size(); ++k)
    if (!(a.e_[k] == b.e_[k])) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << e_[i * cols_ + j].str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix compose(const Matrix& f, const Matrix& g) {
  if (f.cols() != g.rows()) throw ShapeError("compose: " + shape(f) + " after " + shape(g));
  int m = lcm_conductor(f.conductor(), g.conductor());
  if (f.conductor() != m || g.conductor() != m) return compose(f.promote(m), g.promote(m));
  // sparse columns of f
  std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> fcols(f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t k = 0; k < f.cols(); ++k)
      if (!f(i, k).is_zero()) fcols[k].push_back({i, &f(i, k)});
  Matrix r(f.rows(), g.cols(), m);
  for (std::size_t k = 0; k < g.rows(); ++k) {
    if (fcols[k].empty()) continue;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Scalar& gk = g(k, j);
      if (gk.is_zero()) continue;
      if (gk.is_one()) {
        for (const auto& [i, v] : fcols[k]) r.ref(i, j) += *v;
      } else {
        for (const auto& [i, v] : fcols[k]) r.ref(i, j).add_product(*v, gk);
      }
    }
  }
  return r;
}

Matrix compose(std::initializer_list<Matrix> fs) {
  if (fs.size() == 0) throw ShapeError("compose of nothing");
  auto it = fs.end();
  --it;
  Matrix r = *it;
  while (it != fs.begin()) {
    --it;
    r = compose(*it, r);
  }
  return r;
}

Matrix kron(const Matrix& f, const Matrix& g) {
  int m = lcm_conductor(f.conductor(), g.conductor());
  if (f.conductor() != m || g.conductor() != m) return kron(f.promote(m), g.promote(m));
  Matrix r(f.rows() * g.rows(), f.cols() * g.cols(), m);
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar& a = f(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < g.rows(); ++k)
        for (std::size_t l = 0; l < g.cols(); ++l) {
          const Scalar& b = g(k, l);
          if (b.is_zero()) continue;
          r.ref(i * g.rows() + k, j * g.cols() + l) = a * b;
        }
    }
  return r;
}

Matrix kron(std::initializer_list<Matrix> fs) {
  Matrix r = Matrix::identity(1);
  for (const auto& f : fs) r = kron(r, f);
  return r;
}

Matrix swap_matrix(std::size_t a, std::size_t b) {
  Matrix r(a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) r.ref(j * a + i, i * b + j) = Scalar(1);
  return r;
}

Matrix hstack(const std::vector<Matrix>& ms) {
  std::size_t rows = ms.empty() ? 0 : ms[0].rows();
  std::size_t cols = 0;
  int cond = 1;
  for (const auto& m : ms) {
    if (m.rows() != rows) throw ShapeError("hstack: row mismatch");
    cols += m.cols();
    cond = lcm_conductor(cond, m.conductor());
  }
  Matrix r(rows, cols, cond);
  std::size_t c = 0;
  for (const auto& m : ms) {
    r.set_block(0, c, m);
    c += m.cols();
  }
  return r;
}

Matrix vstack(const std::vector<Matrix>& ms) {
  std::size_t cols = ms.empty() ? 0 : ms[0].cols();
  std::size_t rows = 0;
  int cond = 1;
  for (const auto& m : ms) {
    if (m.cols() != cols) throw ShapeError("vstack: column mismatch");
    rows += m.rows();
    cond = lcm_conductor(cond, m.conductor());
  }
  Matrix r(rows, cols, cond);
  std::size_t k = 0;
  for (const auto& m : ms) {
    r.set_block(k, 0, m);
    k += m.rows();
  }
  return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols(), lcm_conductor(a.conductor(), b.conductor()));
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

std::pair<long, long> first_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("first_difference: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return {static_cast<long>(i), static_cast<long>(j)};
  return {-1, -1};
}

}  // namespace braidcalc
