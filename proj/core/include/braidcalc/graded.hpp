#pragma once

#include <vector>

#include "braidcalc/matrix.hpp"
#include "braidcalc/report.hpp"

namespace braidcalc {

// Truncated graded space: dims[0..N].
using GradedSpace = std::vector<std::size_t>;
// Degree-preserving map: one block per degree.
using GradedMap = std::vector<Matrix>;

// (X⊗Y)_n = ⊕_{k+l=n} X_k⊗Y_l, summands by ascending k.
GradedSpace graded_tensor(const GradedSpace& x, const GradedSpace& y);
GradedMap graded_tensor(const GradedMap& f, const GradedMap& g);

// Table of base braidings Ψ_{X_k,Y_l}: X_k⊗Y_l → Y_l⊗X_k for k+l <= N.
using BraidTable = std::vector<std::vector<Matrix>>;
BraidTable swap_table(const GradedSpace& x, const GradedSpace& y);

// (Ψ^{(λ)})_n = ⊕_{k+l=n} λ^{kl} Ψ_{X_k,Y_l}: (X⊗Y)_n → (Y⊗X)_n.
// IncompatibleBraiding when with_differential and λ != -1.
GradedMap graded_braiding(const GradedSpace& x, const GradedSpace& y, const BraidTable& psi, const Scalar& lambda,
                          bool with_differential = false);

// Bialgebra in the N-truncated graded category. Tables are indexed by
// degree pairs (k,l) with k+l <= N.
struct GradedBialgebra {
  int N = 0;
  GradedSpace dims;
  std::vector<std::vector<Matrix>> mult;    // m_{k,l}: B_k⊗B_l → B_{k+l}
  std::vector<std::vector<Matrix>> comult;  // Δ_{k,l}: B_{k+l} → B_k⊗B_l
  Matrix unit;                              // B_0 column
  Matrix counit;                            // B_0 row
  std::vector<Matrix> antipode;             // S_n, empty if absent
  std::vector<Matrix> diff;                 // d_n: B_n → B_{n+1}, n < N; empty if absent
  BraidTable braid;                         // Ψ_{B_k,B_l} without λ weight
  Scalar lambda = Scalar(-1);

  bool has_antipode() const { return !antipode.empty(); }
  bool has_diff() const { return !diff.empty(); }
  const Matrix& m(int k, int l) const { return mult[k][l]; }
  const Matrix& delta(int k, int l) const { return comult[k][l]; }
  // λ^{kl} Ψ_{B_k,B_l}
  Matrix weighted_braid(int k, int l) const;
  // Allocates empty tables for the given dims.
  static GradedBialgebra with_dims(GradedSpace dims);
};

enum class StructureLevel { algebra, coalgebra, bialgebra, hopf, diff_hopf };

Report check_graded_structure(const GradedBialgebra& B, StructureLevel level);

// f: A → B blockwise: algebra, coalgebra, antipode (when both have one)
// and differential (when both have one) compatibility.
Report check_graded_morphism(const GradedMap& f, const GradedBialgebra& A, const GradedBialgebra& B);

// S_n = -Σ_{k>=1} m_{0,n}(id⊗m_{k,n-k})(S_0⊗id⊗S_{n-k})(id⊗Δ_{k,n-k})Δ_{0,n}.
// InvalidBaseHopf if S_0 (taken from B.antipode[0]) is not an antipode of B_0.
std::vector<Matrix> antipode_recursive(const GradedBialgebra& B);

// Im(μ_l∘(id_A⊗f)), Im(μ_r∘(f⊗id_A)), and the two-sided closure.
Matrix generated_left(const Matrix& mu_l, std::size_t dim_a, const Matrix& f);
Matrix generated_right(const Matrix& mu_r, std::size_t dim_a, const Matrix& f);
Matrix generated_two_sided(const Matrix& mu_l, const Matrix& mu_r, std::size_t dim_a, const Matrix& f);

// Graded quotient by the two-sided ideal generated by f: V → B_k.
// NotABiIdeal when the comultiplication, antipode, differential or braiding
// does not descend.
struct IdealQuotient {
  GradedBialgebra quotient;
  std::vector<Matrix> ideal;       // basis of the ideal in each degree
  std::vector<Matrix> projection;  // B_n → Q_n
};
IdealQuotient ideal_quotient(const GradedBialgebra& B, int k, const Matrix& f);

}  // namespace braidcalc
