#pragma once

#include <vector>

#include "braidcalc/bimodule.hpp"
#include "braidcalc/graded.hpp"
#include "braidcalc/tensor_hopf.hpp"

namespace braidcalc {

// Graded bialgebra B with bialgebra maps H → B_0 → H composing to id_H.
// A plain bialgebra is the case N = 0.
struct BialgebraProjection {
  HopfAlgebraData H;
  GradedBialgebra B;
  Matrix eta_bar;  // H → B_0
  Matrix eps_bar;  // B_0 → H
};

Report check_projection(const BialgebraProjection& P);

// The same data as a bialgebra in Hopf bimodules over H: one Hopf bimodule
// per degree, m̲_{k,l}: B_k⊗_H B_l → B_{k+l}, Δ̲_{k,l}: B_{k+l} → B_k⊗_H B_l.
struct BimoduleBialgebra {
  HopfAlgebraData H;
  int N = 0;
  std::vector<HopfBimodule> pieces;
  std::vector<std::vector<TensorOverH>> tensors;  // realization of B_k⊗_H B_l
  std::vector<std::vector<Matrix>> mult;
  std::vector<std::vector<Matrix>> comult;
  Matrix eta_bar;
  Matrix eps_bar;
  std::vector<Matrix> antipode;  // S̲_n, empty if B has none
};

// m̲ ∘ λ = m and ρ ∘ Δ̲ = Δ. FactorizationError when m is not H-balanced or
// Δ does not factor through ρ, i.e. P is not a projection.
BimoduleBialgebra projection_to_bimodule(const BialgebraProjection& P);
// m = m̲ ∘ λ, Δ = ρ ∘ Δ̲, η = η̲ ∘ η_H, ε = ε_H ∘ ε̲, S = S̲ ∘ S_{B/H}.
BialgebraProjection projection_to_plain(const BimoduleBialgebra& U);

// Exterior Hopf algebra of a Hopf bimodule X: T^∧ of the coinvariants with
// their transported YD braiding, then the biproduct with H. Degree 0 is H,
// degree 1 is X in its own basis.
struct HopfWedge {
  GradedBialgebra B;
  Coinvariants coinv;                     // of X
  Matrix braiding;                        // YD braiding on M⊗M
  WedgeAlgebra W;                         // T^∧(M)
  std::vector<CrossedModule> components;  // W_n with the restricted crossed structure
  std::vector<HopfBimodule> pieces;       // B_n
  std::vector<Matrix> to_smash;           // B_n → H⊗W_n
};
HopfWedge wedge_over_H(const HopfAlgebraData& H, const HopfBimodule& X, int N);

}  // namespace braidcalc
