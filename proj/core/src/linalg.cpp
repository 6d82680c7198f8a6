#include "braidcalc/linalg.hpp"

#include "braidcalc/errors.hpp"

namespace braidcalc {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.ref(a, j), m.ref(b, j));
}

// In-place Gauss-Jordan, pivoting only in columns [0, pivot_cols).
std::vector<std::size_t> eliminate(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t cur = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < pivot_cols && cur < m.rows(); ++c) {
    std::size_t piv = m.rows();
    for (std::size_t r = cur; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv == m.rows()) continue;
    swap_rows(m, cur, piv);
    Scalar iv = m(cur, c).inv();
    nz.clear();
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (m(cur, k).is_zero()) continue;
      if (!iv.is_one()) m.ref(cur, k) = m(cur, k) * iv;
      nz.push_back(k);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == cur || m(r, c).is_zero()) continue;
      Scalar f = -m(r, c);
      for (std::size_t k : nz) m.ref(r, k).add_product(f, m(cur, k));
    }
    pivots.push_back(c);
    ++cur;
  }
  return pivots;
}

}  // namespace

Rref rref(const Matrix& a) {
  Rref out{a, {}};
  out.pivots = eliminate(out.r, a.cols());
  return out;
}

std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  // eliminate along the shorter side
  if (a.rows() < a.cols()) {
    Matrix t = a.transpose();
    return eliminate(t, t.cols()).size();
  }
  Matrix m = a;
  return eliminate(m, m.cols()).size();
}

Matrix kernel_basis(const Matrix& f) {
  Rref R = rref(f);
  std::vector<char> is_piv(f.cols(), 0);
  for (std::size_t p : R.pivots) is_piv[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < f.cols(); ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Matrix k(f.cols(), free_cols.size(), f.conductor());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t c = free_cols[t];
    k.set(c, t, Scalar(1));
    for (std::size_t i = 0; i < R.pivots.size(); ++i)
      if (!R.r(i, c).is_zero()) k.set(R.pivots[i], t, -R.r(i, c));
  }
  return k;
}

Matrix image_basis(const Matrix& f) {
  Rref R = rref(f.transpose());
  return R.r.block(0, 0, R.pivots.size(), R.r.cols()).transpose();
}

KernelImage kernel_image(const Matrix& f) {
  KernelImage out;
  out.kernel_basis = kernel_basis(f);
  Rref R = rref(f.transpose());
  std::size_t r = R.pivots.size();
  out.image_basis = R.r.block(0, 0, r, R.r.cols()).transpose();
  // image_basis has identity rows at the pivots, so coordinates are read off there
  out.coimage_proj = f.select_rows(R.pivots);
  out.cokernel_proj = kernel_basis(out.image_basis.transpose()).transpose();
  if (out.cokernel_proj.cols() != f.rows()) out.cokernel_proj = Matrix(0, f.rows());
  return out;
}

Matrix solve_left(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve_left: row mismatch");
  std::size_t n = a.cols();
  Matrix aug = hstack({a, b});
  auto piv = eliminate(aug, n);
  if (piv.size() != n) throw FactorizationError("solve_left: map is not injective");
  for (std::size_t r = n; r < aug.rows(); ++r)
    for (std::size_t j = n; j < aug.cols(); ++j)
      if (!aug(r, j).is_zero())
        throw FactorizationError("image does not lie in the subobject (row " + std::to_string(r) + ")");
  return aug.block(0, n, n, b.cols());
}

Matrix solve_right(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("solve_right: column mismatch");
  try {
    return solve_left(a.transpose(), b.transpose()).transpose();
  } catch (const FactorizationError& e) {
    throw FactorizationError(std::string("map does not vanish on the kernel of the quotient: ") + e.what());
  }
}

Matrix solve_factor(const Matrix& mono, const Matrix& epi, const Matrix& h) {
  if (mono.rows() != h.rows() || epi.cols() != h.cols()) throw ShapeError("solve_factor: shape mismatch");
  Matrix y = solve_left(mono, h);
  return solve_right(epi, y);
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse of non-square matrix");
  try {
    return solve_left(a, Matrix::identity(a.rows()));
  } catch (const FactorizationError&) {
    throw DivisionByZero();
  }
}

Matrix right_inverse(const Matrix& epi) {
  Rref R = rref(epi);
  if (R.pivots.size() != epi.rows()) throw FactorizationError("right_inverse: map is not surjective");
  Matrix sq = epi.select_cols(R.pivots);
  Matrix inv = inverse(sq);
  Matrix s(epi.cols(), epi.rows(), inv.conductor());
  for (std::size_t i = 0; i < R.pivots.size(); ++i)
    for (std::size_t j = 0; j < epi.rows(); ++j) s.set(R.pivots[i], j, inv(i, j));
  return s;
}

Matrix left_inverse(const Matrix& mono) { return right_inverse(mono.transpose()).transpose(); }

bool span_contains(const Matrix& a, const Matrix& b) {
  if (b.cols() == 0) return true;
  return rank(hstack({a, b})) == rank(a);
}

bool same_span(const Matrix& a, const Matrix& b) {
  std::size_t ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  if (a.cols() == 0 || b.cols() == 0) return ra == 0;
  return rank(hstack({a, b})) == ra;
}

Matrix coordinates(const Matrix& a, const Matrix& b) { return solve_left(a, b); }

}  // namespace braidcalc
