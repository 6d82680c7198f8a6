#pragma once

#include <memory>
#include <vector>

#include "braidcalc/matrix.hpp"

namespace braidcalc {

struct SparseCols {
  std::size_t rows = 0;
  std::size_t cols = 0;
  int conductor = 1;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> col;
  static SparseCols from(const Matrix& m);
};

// One tensor factor of a layer: either an identity on a space of dimension n
// or a linear map given by a matrix.
class Op {
 public:
  Op(const Matrix& m);  // NOLINT(google-explicit-constructor)
  static Op id(std::size_t n);

  std::size_t src() const { return src_; }
  std::size_t dst() const { return dst_; }
  bool is_identity() const { return !sp_; }
  const SparseCols& sparse() const { return *sp_; }

 private:
  Op() = default;
  std::size_t src_ = 0;
  std::size_t dst_ = 0;
  std::shared_ptr<const SparseCols> sp_;
};

inline Op I(std::size_t n) { return Op::id(n); }

// A layer is the tensor product of its factors, left factor most significant.
using Layer = std::vector<Op>;

// Applies the layers in order (first layer first) to every column of `input`.
// Equivalent to compose(kron(last...), ..., kron(first...), input) without
// materializing any Kronecker product.
Matrix chain(const Matrix& input, const std::vector<Layer>& layers);
// Same, starting from the identity on the source of the first layer.
Matrix chain(const std::vector<Layer>& layers);

}  // namespace braidcalc
