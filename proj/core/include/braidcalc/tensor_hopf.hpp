#pragma once

#include "braidcalc/braided_space.hpp"
#include "braidcalc/graded.hpp"

namespace braidcalc {

enum class TensorVariant {
  shuffle_coproduct,  // T(X): m = id, Δ_{n,m} = [n+m over n]
  shuffle_product,    // T°(X): m_{n,m} = [n over n+m], Δ = id
};

// Tensor Hopf algebra truncated at N, with λ = X.lambda().
GradedBialgebra build_tensor_hopf(const BraidedSpace& X, TensorVariant variant, int N);
GradedBialgebra build_tensor_hopf(BraidRep& rep, TensorVariant variant, int N);

// (Â_X)_n = [n | X; -1]!
GradedMap antisymmetrizer(const BraidedSpace& X, int N);

// Â: T(X) → T°(X) at λ = -1, checked blockwise.
Report check_antisym_hopf_morphism(const BraidedSpace& X, int N);

struct WedgeAlgebra {
  GradedBialgebra algebra;  // T^∧(X)
  GradedMap coim;           // T → T^∧, surjective
  GradedMap im;             // T^∧ → T°, injective
  GradedMap A;              // im ∘ coim
  std::vector<std::size_t> dims() const { return algebra.dims; }
};

// Induced structure on the image of Â via solve_factor; λ is fixed to -1.
WedgeAlgebra build_wedge(const BraidedSpace& X, int N);

// The same structure computed only from the image side
// (m^∧ = im⁻¹∘m°∘(im⊗im), ...); agreement with build_wedge is the
// uniqueness check.
GradedBialgebra wedge_via_image(const WedgeAlgebra& W, const BraidedSpace& X);

struct QuadraticComparison {
  std::vector<std::size_t> wedge_dims;
  std::vector<std::size_t> quadratic_dims;  // T / (Ker [2]!)
  int first_difference = -1;                // degree, or -1 if equal through N
  bool equal() const { return first_difference < 0; }
};
QuadraticComparison wedge_vs_quadratic(const BraidedSpace& X, int N);

}  // namespace braidcalc
