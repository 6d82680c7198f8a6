#pragma once

#include <string>

#include "braidcalc/hopf.hpp"

namespace braidcalc {

// Hopf bimodule over H in vector spaces: actions and coactions on both sides.
// Tensor indices: H⊗X is h*dim(X)+x, X⊗H is x*dim(H)+h.
struct HopfBimodule {
  std::string name;
  std::size_t dim = 0;
  Matrix mu_l;  // H⊗X → X
  Matrix mu_r;  // X⊗H → X
  Matrix nu_l;  // X → H⊗X
  Matrix nu_r;  // X → X⊗H
};

// Right-right crossed module (Yetter-Drinfeld module).
struct CrossedModule {
  std::string name;
  std::size_t dim = 0;
  Matrix act;    // M⊗H → M
  Matrix coact;  // M → M⊗H
};

Report check_bimodule(const HopfAlgebraData& H, const HopfBimodule& X);
Report check_crossed(const HopfAlgebraData& H, const CrossedModule& M);
// f: X → Y commutes with all four structure maps.
Report check_bimodule_morphism(const HopfAlgebraData& H, const Matrix& f, const HopfBimodule& X,
                               const HopfBimodule& Y);
Report check_crossed_morphism(const HopfAlgebraData& H, const Matrix& f, const CrossedModule& M,
                              const CrossedModule& N);

HopfBimodule regular_bimodule(const HopfAlgebraData& H);
// H⊗H with outer actions and diagonal coactions (H⊡H).
HopfBimodule free_bimodule(const HopfAlgebraData& H);

// Left coinvariants {x : ν_l(x) = 1⊗x} with the induced crossed structure.
struct Coinvariants {
  CrossedModule module;
  Matrix incl;  // M → X
  Matrix proj;  // X → M, proj ∘ incl = id
};
Coinvariants coinvariants(const HopfAlgebraData& H, const HopfBimodule& X);

// H⋉M on H⊗M: induced left structure, diagonal right structure.
HopfBimodule smash(const HopfAlgebraData& H, const CrossedModule& M);
// κ(a⊗m) = a·incl(m), an isomorphism H⋉(coinvariants of X) → X.
Matrix kappa(const HopfAlgebraData& H, const HopfBimodule& X, const Coinvariants& C);

// X⊡Y: induced actions, diagonal coactions. X⊙Y: diagonal actions, induced coactions.
HopfBimodule box_product(const HopfAlgebraData& H, const HopfBimodule& X, const HopfBimodule& Y);
HopfBimodule dot_product(const HopfAlgebraData& H, const HopfBimodule& X, const HopfBimodule& Y);

// X⊗_H Y realized on X⊗(coinvariants of Y).
struct TensorOverH {
  HopfBimodule Z;
  Matrix lambda;  // X⊗Y → Z
  Matrix rho;     // Z → X⊗Y
  Matrix section; // x⊗m ↦ x⊗incl(m), λ ∘ section = id
  std::size_t dim_x = 0;
  std::size_t dim_y = 0;
};
TensorOverH tensor_over_H(const HopfAlgebraData& H, const HopfBimodule& X, const HopfBimodule& Y);
// f⊗_H g, the map induced on the quotients.
Matrix tensor_maps(const Matrix& f, const Matrix& g, const TensorOverH& src, const TensorOverH& dst);

// Θ(x⊗y) = x_{-1}·y_0 ⊗ x_0·y_1 : X⊗Y → Y⊗X.
Matrix theta(const HopfAlgebraData& H, const HopfBimodule& X, const HopfBimodule& Y);
// Θ ∘ input, without forming Θ.
Matrix theta(const HopfAlgebraData& H, const HopfBimodule& X, const HopfBimodule& Y, const Matrix& input);
// The braiding X⊗_H Y → Y⊗_H X, unique with ρ_{Y,X} ∘ B ∘ λ_{X,Y} = Θ.
Matrix hopf_bimodule_braiding(const HopfAlgebraData& H, const HopfBimodule& X, const HopfBimodule& Y);
Matrix hopf_bimodule_braiding(const HopfAlgebraData& H, const HopfBimodule& X, const HopfBimodule& Y,
                              const TensorOverH& xy, const TensorOverH& yx);
// Same braiding through an explicit section s of λ_{X,Y}: ρ⁺ ∘ Θ ∘ s.
Matrix braiding_via_section(const HopfAlgebraData& H, const HopfBimodule& X, const HopfBimodule& Y,
                            const TensorOverH& xy, const TensorOverH& yx, const Matrix& section);
// Closed formula through S⁻¹; it inverts the braiding B_{Y,X}.
Matrix inverse_braiding_formula(const HopfAlgebraData& H, const HopfBimodule& X, const HopfBimodule& Y,
                                const TensorOverH& xy, const TensorOverH& yx);

// (X⊗_H Y)⊗_H W → X⊗_H (Y⊗_H W) and the four realizations it connects.
struct Associator {
  TensorOverH xy, xy_w, yw, x_yw;
  Matrix alpha;
};
Associator associator(const HopfAlgebraData& H, const HopfBimodule& X, const HopfBimodule& Y,
                      const HopfBimodule& W);

// S_{X/H}(x) = S(x_{-1})·x_0·S(x_1).
Matrix relative_antipode(const HopfAlgebraData& H, const HopfBimodule& X);
// S_{X/H} twists each structure map by S: the four relations
// S_X(h·x) = S_X(x)·S(h), S_X(x·h) = S(h)·S_X(x) and their comodule duals.
Report check_relative_antipode(const HopfAlgebraData& H, const HopfBimodule& X, const Matrix& s);

// Crossed module tensor product: diagonal action, coaction m_0⊗n_0⊗m_1n_1.
CrossedModule crossed_tensor(const HopfAlgebraData& H, const CrossedModule& M, const CrossedModule& N);
// Braiding M⊗N → N⊗M transported from the Hopf bimodule braiding of H⋉M, H⋉N.
Matrix yd_braiding(const HopfAlgebraData& H, const CrossedModule& M, const CrossedModule& N);
// Direct formula m⊗n ↦ n_0⊗m·n_1.
Matrix yd_braiding_direct(const HopfAlgebraData& H, const CrossedModule& M, const CrossedModule& N);

// Adjoint crossed modules: H_ad (adjoint action, regular coaction) and
// H^coad (regular action, coadjoint coaction).
CrossedModule adjoint_crossed(const HopfAlgebraData& H);
CrossedModule coadjoint_crossed(const HopfAlgebraData& H);
CrossedModule trivial_crossed(const HopfAlgebraData& H);
// One-dimensional module over a group algebra: coaction v ↦ v⊗g_c, action by
// the character values chi (one per basis element).
CrossedModule character_crossed(const HopfAlgebraData& H, std::size_t grade, const std::vector<Scalar>& chi);

}  // namespace braidcalc
