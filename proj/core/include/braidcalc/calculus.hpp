#pragma once

#include <vector>

#include "braidcalc/bimodule.hpp"
#include "braidcalc/graded.hpp"
#include "braidcalc/projection.hpp"

namespace braidcalc {

// First order calculus d: H → X over a Hopf algebra H.
struct FirstOrderCalculus {
  HopfAlgebraData H;
  HopfBimodule X;
  Matrix d;
};

enum class CalculusLevel { fodc, diff_algebra, diff_hopf, bicovariant };

// fodc: Leibniz and surjectivity of μ_l(id⊗d). bicovariant adds ν_l d = (id⊗d)Δ
// and ν_r d = (d⊗id)Δ. diff_algebra and diff_hopf check the calculus as the
// graded object (H, X, d) truncated at N = 1.
Report verify_calculus(const FirstOrderCalculus& c, CalculusLevel level);
// Graded version. Every level also records the generation conditions
// gen_left (H⟨d_n⟩), gen_right (⟨d_n⟩H), gen_two_sided (H⟨d_n⟩H),
// gen_products (H⟨m(d⊗…⊗d)⟩) and gen_agree, which fails when they disagree.
Report verify_calculus(const GradedBialgebra& A, CalculusLevel level);

// Degrees 0 and 1 of a first order calculus as a graded bialgebra with
// differential, N = 1. The antipode comes from antipode_recursive.
GradedBialgebra as_graded(const FirstOrderCalculus& c);

// Ker m ⊂ H⊡H with D(a) = 1⊗a − a⊗1.
FirstOrderCalculus universal_fodc(const HopfAlgebraData& H);
// Basis of Ker m in H⊗H, the realization used by universal_fodc.
Matrix universal_inclusion(const HopfAlgebraData& H);
// π = μ_l(id⊗d)∘incl: the morphism from the universal calculus to c.
Matrix universal_morphism(const FirstOrderCalculus& c);
// ω(a) = S(a_1)·d(a_2): H → X.
Matrix maurer_cartan_form(const FirstOrderCalculus& c);

// Ker ε with the regular right action and the coadjoint coaction.
struct KernelCounit {
  CrossedModule module;
  Matrix incl;  // Ker ε → H
};
KernelCounit kernel_counit_crossed(const HopfAlgebraData& H);

// Smallest subspace containing the columns of gens that is stable under the
// action and is a subcomodule. Returned as an image_basis of M.
Matrix crossed_submodule_closure(const HopfAlgebraData& H, const CrossedModule& M, const Matrix& gens);
// All distinct crossed submodules spanned by subsets of the candidate columns.
// InvalidInput for more than 16 candidates.
std::vector<Matrix> enumerate_submodules(const HopfAlgebraData& H, const CrossedModule& M,
                                         const Matrix& candidates);

// Quotient of the universal calculus by the sub-bimodule H·ω(R). R is given
// by columns in H that must lie in Ker ε and span a crossed submodule,
// otherwise NotASubmodule.
FirstOrderCalculus fodc_from_submodule(const HopfAlgebraData& H, const Matrix& R);
// R = Ker ε ∩ Ker ω, as an image_basis in H.
Matrix calculus_submodule(const FirstOrderCalculus& c);

// H⊕_d X: left action and coactions blockwise, right action
// (a,ξ)·h = (ah, a·dh + ξ·h). Basis: H first, then X.
struct CommaExtension {
  HopfBimodule E;
  Matrix x;  // (η, 0)
  Matrix in_h, in_x, pr_h, pr_x;
};
CommaExtension comma_extension(const FirstOrderCalculus& c);
// [x,·]_n = m_{1,n}(x⊗·) − (−1)^n m_{n,1}(·⊗x) for n < N, x in degree 1.
std::vector<Matrix> graded_bracket(const GradedBialgebra& A, const Matrix& x);

struct MaximalCalculus {
  GradedBialgebra sub;
  std::vector<Matrix> incl;  // sub_n → A_n
};
// i_0 = id, i_1 = Im m_{0,1}(id⊗d_0), i_n = Im m_{1,n−1}(i_1⊗i_{n−1}).
// Full components keep identity inclusions, so the operation is idempotent.
MaximalCalculus maximal_calculus(const GradedBialgebra& A);

// The unique algebra morphism out of a differential calculus extending f0:
// f_n ∘ m_{0,n}(id⊗d_{n−1}) = m'_{0,n}(f0⊗d'_{n−1}f_{n−1}).
std::vector<Matrix> extend_from_degree_zero(const GradedBialgebra& src, const GradedBialgebra& dst,
                                            const Matrix& f0);

// Exterior Hopf algebra of forms built from the biproduct wedge_over_H(H, X, N);
// d_0 = d and d_n is solved from d_n(a·dω) = da·dω.
struct ExteriorCalculus {
  GradedBialgebra forms;
  HopfWedge wedge;
};
ExteriorCalculus exterior_calculus(const FirstOrderCalculus& c, int N = 3);

// The same algebra as the maximal calculus inside (H⊕_d X)^{∧_H} with
// differential [x,·].
struct ExteriorViaComma {
  CommaExtension comma;
  HopfWedge wedge;          // of H⊕_d X
  GradedBialgebra ambient;  // wedge.B with diff [x,·]
  MaximalCalculus maximal;
};
ExteriorViaComma exterior_calculus_maximal(const FirstOrderCalculus& c, int N = 3);

}  // namespace braidcalc
