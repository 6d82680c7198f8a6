#pragma once

#include <map>
#include <optional>
#include <vector>

#include "braidcalc/matrix.hpp"
#include "braidcalc/permutation.hpp"

namespace braidcalc {

struct YangBaxterResult {
  bool ok = true;
  // Basis index of X⊗X⊗X (column) and output row where the two sides differ.
  long col = -1;
  long row = -1;
};

// (Ψ⊗id)(id⊗Ψ)(Ψ⊗id) == (id⊗Ψ)(Ψ⊗id)(id⊗Ψ) on X^{⊗3}.
YangBaxterResult check_yang_baxter(const Matrix& psi);

// A finite-dimensional space with an invertible Yang-Baxter operator on
// X⊗X and the unit automorphism lambda.
class BraidedSpace {
 public:
  // Validates invertibility and the braid equation (InvalidInput otherwise).
  BraidedSpace(std::size_t dim, Matrix psi, Scalar lambda = Scalar(-1));

  static BraidedSpace swap(std::size_t d, Scalar lambda = Scalar(-1));
  // Ψ(e_i⊗e_j) = q_ij e_j⊗e_i
  static BraidedSpace diagonal(const std::vector<std::vector<Scalar>>& q, Scalar lambda = Scalar(-1));
  static BraidedSpace line(const Scalar& q, Scalar lambda = Scalar(-1));

  std::size_t dim() const { return dim_; }
  const Matrix& psi() const { return psi_; }
  const Scalar& lambda() const { return lambda_; }
  BraidedSpace with_lambda(const Scalar& lambda) const;

 private:
  BraidedSpace() = default;
  std::size_t dim_ = 0;
  Matrix psi_;
  Scalar lambda_;
};

// d^j, or TooLarge when above kMaxTensorDim.
std::size_t tensor_power_dim(std::size_t d, int j);

// σ_C(X) from an explicit word t_{a_1}...t_{a_l}: Ψ_{a_1}∘...∘Ψ_{a_l}.
Matrix rep_from_word(const BraidedSpace& X, int j, const std::vector<int>& word);
// σ_C(X) through the canonical reduced word.
Matrix rep_matrix(const Permutation& p, const BraidedSpace& X);

// Memoizing representation of S_j for a fixed space; rep(σ) = Ψ_a∘rep(t_a σ)
// for a left descent a of σ.
class BraidRep {
 public:
  explicit BraidRep(const BraidedSpace& X) : X_(X) {}
  const Matrix& rep(const Permutation& p);
  const BraidedSpace& space() const { return X_; }

 private:
  BraidedSpace X_;
  std::map<std::vector<int>, Matrix> cache_;
};

// Σ λ^{ℓ(σ)} σ_C(X) over S_j^pi (lower) or S^j_pi (upper), λ = X.lambda().
Matrix multinomial(const Partition& pi, const BraidedSpace& X, ShuffleSide side);
Matrix multinomial(const Partition& pi, BraidRep& rep, ShuffleSide side);
// [j | X; λ]! with λ = X.lambda().
Matrix braided_factorial(int j, const BraidedSpace& X);
Matrix braided_factorial(int j, BraidRep& rep);

// Ψ_{X^a,X^b}: X^{⊗a}⊗X^{⊗b} → X^{⊗b}⊗X^{⊗a}, without λ weights.
Matrix block_braiding(int a, int b, BraidRep& rep);

}  // namespace braidcalc
