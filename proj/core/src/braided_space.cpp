#include "braidcalc/braided_space.hpp"

#include "braidcalc/errors.hpp"
#include "braidcalc/linalg.hpp"
#include "braidcalc/tensor.hpp"

namespace braidcalc {

namespace {

std::size_t isqrt_exact(std::size_t n) {
  std::size_t d = 0;
  while ((d + 1) * (d + 1) <= n) ++d;
  if (d * d != n) throw ShapeError("braiding side length is not a perfect square");
  return d;
}

Layer psi_layer(const Matrix& psi, std::size_t d, int j, int a) {
  return {I(tensor_power_dim(d, a - 1)), psi, I(tensor_power_dim(d, j - a - 1))};
}

}  // namespace

YangBaxterResult check_yang_baxter(const Matrix& psi) {
  if (psi.rows() != psi.cols()) throw ShapeError("braiding must be square");
  std::size_t d = isqrt_exact(psi.rows());
  Layer l{psi, I(d)}, r{I(d), psi};
  Matrix lhs = chain({l, r, l});
  Matrix rhs = chain({r, l, r});
  YangBaxterResult res;
  auto [row, col] = first_difference(lhs, rhs);
  if (row >= 0) {
    res.ok = false;
    res.row = row;
    res.col = col;
  }
  return res;
}

BraidedSpace::BraidedSpace(std::size_t dim, Matrix psi, Scalar lambda)
    : dim_(dim), psi_(std::move(psi)), lambda_(std::move(lambda)) {
  if (psi_.rows() != dim * dim || psi_.cols() != dim * dim) throw ShapeError("braiding must be d²×d²");
  if (lambda_.is_zero()) throw InvalidInput("lambda must be invertible");
  if (rank(psi_) != psi_.rows()) throw InvalidInput("braiding is not invertible");
  YangBaxterResult yb = check_yang_baxter(psi_);
  if (!yb.ok)
    throw InvalidInput("braiding violates the braid equation at basis index " + std::to_string(yb.col));
}

BraidedSpace BraidedSpace::swap(std::size_t d, Scalar lambda) {
  return BraidedSpace(d, swap_matrix(d, d), std::move(lambda));
}

BraidedSpace BraidedSpace::diagonal(const std::vector<std::vector<Scalar>>& q, Scalar lambda) {
  std::size_t d = q.size();
  Matrix psi(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) psi.set(j * d + i, i * d + j, q[i][j]);
  return BraidedSpace(d, std::move(psi), std::move(lambda));
}

BraidedSpace BraidedSpace::line(const Scalar& q, Scalar lambda) {
  return BraidedSpace(1, Matrix::scalar(q), std::move(lambda));
}

BraidedSpace BraidedSpace::with_lambda(const Scalar& lambda) const {
  BraidedSpace b = *this;
  b.lambda_ = lambda;
  return b;
}

std::size_t tensor_power_dim(std::size_t d, int j) {
  std::size_t n = 1;
  for (int i = 0; i < j; ++i) {
    n *= d;
    if (n > static_cast<std::size_t>(kMaxTensorDim))
      throw TooLarge("tensor power " + std::to_string(d) + "^" + std::to_string(j) + " exceeds " +
                     std::to_string(kMaxTensorDim));
  }
  return n;
}

Matrix rep_from_word(const BraidedSpace& X, int j, const std::vector<int>& word) {
  std::size_t n = tensor_power_dim(X.dim(), j);
  std::vector<Layer> layers;
  for (auto it = word.rbegin(); it != word.rend(); ++it) layers.push_back(psi_layer(X.psi(), X.dim(), j, *it));
  if (layers.empty()) return Matrix::identity(n);
  return chain(layers);
}

Matrix rep_matrix(const Permutation& p, const BraidedSpace& X) {
  return rep_from_word(X, p.size(), p.reduced_word());
}

const Matrix& BraidRep::rep(const Permutation& p) {
  auto it = cache_.find(p.images());
  if (it != cache_.end()) return it->second;
  int j = p.size();
  Matrix m;
  // left descent: value a+1 appears before value a
  Permutation inv = p.inverse();
  int a = 0;
  for (int v = 0; v + 1 < j; ++v)
    if (inv(v) > inv(v + 1)) {
      a = v + 1;
      break;
    }
  if (a == 0) {
    m = Matrix::identity(tensor_power_dim(X_.dim(), j));
  } else {
    Permutation shorter = Permutation::transposition(j, a) * p;
    const Matrix& base = rep(shorter);
    m = chain(base, {psi_layer(X_.psi(), X_.dim(), j, a)});
  }
  return cache_.emplace(p.images(), std::move(m)).first->second;
}

Matrix multinomial(const Partition& pi, BraidRep& rep, ShuffleSide side) {
  const Scalar& lambda = rep.space().lambda();
  int j = 0;
  for (int k : pi) j += k;
  Matrix sum(tensor_power_dim(rep.space().dim(), j), tensor_power_dim(rep.space().dim(), j));
  for (const auto& s : shuffle_set(pi, side)) {
    int l = s.length();
    const Matrix& r = rep.rep(s);
    if (l == 0 || lambda.is_one())
      sum += r;
    else
      sum += lambda.pow(l) * r;
  }
  return sum;
}

Matrix multinomial(const Partition& pi, const BraidedSpace& X, ShuffleSide side) {
  BraidRep rep(X);
  return multinomial(pi, rep, side);
}

Matrix braided_factorial(int j, BraidRep& rep) {
  return multinomial(Partition(j, 1), rep, ShuffleSide::upper);
}

Matrix braided_factorial(int j, const BraidedSpace& X) {
  BraidRep rep(X);
  return braided_factorial(j, rep);
}

Matrix block_braiding(int a, int b, BraidRep& rep) { return rep.rep(block_swap(a, b)); }

}  // namespace braidcalc
