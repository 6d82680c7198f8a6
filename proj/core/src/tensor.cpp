#include "braidcalc/tensor.hpp"

#include "braidcalc/errors.hpp"

namespace braidcalc {

SparseCols SparseCols::from(const Matrix& m) {
  SparseCols s;
  s.rows = m.rows();
  s.cols = m.cols();
  s.conductor = m.conductor();
  s.col.resize(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) s.col[j].push_back({i, m(i, j)});
  return s;
}

Op::Op(const Matrix& m) : src_(m.cols()), dst_(m.rows()), sp_(std::make_shared<SparseCols>(SparseCols::from(m))) {}

Op Op::id(std::size_t n) {
  Op o;
  o.src_ = n;
  o.dst_ = n;
  return o;
}

namespace {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

class Accumulator {
 public:
  void reset(std::size_t n) {
    if (val_.size() < n) {
      val_.resize(n);
      used_.resize(n, 0);
    }
  }
  void add(std::size_t i, const Scalar& s) {
    if (!used_[i]) {
      used_[i] = 1;
      val_[i] = s;
      touched_.push_back(i);
    } else {
      val_[i] += s;
    }
  }
  SparseVec take() {
    SparseVec out;
    out.reserve(touched_.size());
    for (std::size_t i : touched_) {
      used_[i] = 0;
      if (!val_[i].is_zero()) out.push_back({i, std::move(val_[i])});
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<Scalar> val_;
  std::vector<char> used_;
  std::vector<std::size_t> touched_;
};

struct LayerPlan {
  const Layer* layer;
  std::size_t src = 1;
  std::size_t dst = 1;
  std::vector<std::size_t> dst_stride;
};

void apply_term(const LayerPlan& p, std::size_t idx, const Scalar& val, Accumulator& acc) {
  const Layer& L = *p.layer;
  std::size_t nf = L.size();
  // digits of idx in the source factorization
  std::size_t digits[32];
  std::size_t rest = idx;
  for (std::size_t t = nf; t-- > 0;) {
    digits[t] = rest % L[t].src();
    rest /= L[t].src();
  }
  // depth-first product over factor columns
  auto rec = [&](auto&& self, std::size_t t, std::size_t pos, const Scalar& coef) -> void {
    if (t == nf) {
      acc.add(pos, coef);
      return;
    }
    const Op& op = L[t];
    if (op.is_identity()) {
      self(self, t + 1, pos + digits[t] * p.dst_stride[t], coef);
      return;
    }
    for (const auto& [r, v] : op.sparse().col[digits[t]]) {
      if (v.is_one())
        self(self, t + 1, pos + r * p.dst_stride[t], coef);
      else
        self(self, t + 1, pos + r * p.dst_stride[t], coef * v);
    }
  };
  rec(rec, 0, 0, val);
}

}  // namespace

namespace {

// Shared driver: column j of the input is produced by `column(j)` as a sparse vector.
template <class ColumnFn>
Matrix run_chain(std::size_t rows, std::size_t cols, int cond, ColumnFn column, const std::vector<Layer>& layers) {
  std::vector<LayerPlan> plans;
  std::size_t cur = rows;
  for (const auto& L : layers) {
    if (L.size() > 32) throw ShapeError("chain: too many tensor factors");
    LayerPlan p;
    p.layer = &L;
    for (const auto& op : L) {
      p.src *= op.src();
      p.dst *= op.dst();
      if (!op.is_identity()) cond = lcm_conductor(cond, op.sparse().conductor);
    }
    if (p.src != cur)
      throw ShapeError("chain: layer source " + std::to_string(p.src) + " does not match " + std::to_string(cur));
    p.dst_stride.assign(L.size(), 1);
    for (std::size_t t = L.size(); t-- > 1;) p.dst_stride[t - 1] = p.dst_stride[t] * L[t].dst();
    cur = p.dst;
    plans.push_back(std::move(p));
  }
  Matrix out(cur, cols, cond);
  Accumulator acc;
  for (std::size_t j = 0; j < cols; ++j) {
    SparseVec v = column(j);
    for (const auto& p : plans) {
      acc.reset(p.dst);
      for (const auto& [idx, val] : v) apply_term(p, idx, val, acc);
      v = acc.take();
      if (v.empty()) break;
    }
    for (auto& [i, s] : v) out.set(i, j, s.promote(cond));
  }
  return out;
}

}  // namespace

Matrix chain(const Matrix& input, const std::vector<Layer>& layers) {
  // one row-major pass instead of a strided scan per column
  SparseCols in = SparseCols::from(input);
  return run_chain(
      input.rows(), input.cols(), input.conductor(), [&in](std::size_t j) { return std::move(in.col[j]); }, layers);
}

Matrix chain(const std::vector<Layer>& layers) {
  if (layers.empty()) throw ShapeError("chain: no layers");
  std::size_t n = 1;
  for (const auto& op : layers.front()) n *= op.src();
  return run_chain(n, n, 1, [](std::size_t j) { return SparseVec{{j, Scalar(1)}}; }, layers);
}

}  // namespace braidcalc
