#include <gtest/gtest.h>

#include "braidcalc/corpus.hpp"
#include "braidcalc/errors.hpp"
#include "braidcalc/linalg.hpp"
#include "braidcalc/tensor.hpp"
#include "braidcalc/tensor_hopf.hpp"

using namespace braidcalc;

namespace {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  return multinomial_coefficient({k, n - k});
}

}  // namespace

TEST(TensorHopf, Examples) {
  for (const auto& [name, X] : corpus::braidings()) {
    GradedBialgebra T = build_tensor_hopf(X, TensorVariant::shuffle_coproduct, 2);
    std::size_t d = X.dim();
    EXPECT_EQ(T.delta(1, 1), Matrix::identity(d * d) + X.lambda() * X.psi()) << name;
    EXPECT_EQ(T.antipode[1], -Matrix::identity(d)) << name;
  }
  Scalar q = Scalar::zeta(5, 2);
  GradedBialgebra To = build_tensor_hopf(BraidedSpace::line(q, Scalar(1)), TensorVariant::shuffle_product, 2);
  EXPECT_EQ(To.m(1, 1), Matrix::scalar(Scalar(1) + q));
  EXPECT_THROW(build_tensor_hopf(BraidedSpace::swap(2), TensorVariant::shuffle_coproduct, 13), TooLarge);
}

TEST(TensorHopf, BothVariantsAreHopfOnCorpus) {
  for (const auto& [name, X] : corpus::braidings())
    for (auto v : {TensorVariant::shuffle_coproduct, TensorVariant::shuffle_product}) {
      GradedBialgebra T = build_tensor_hopf(X, v, 4);
      Report r = check_graded_structure(T, StructureLevel::hopf);
      EXPECT_TRUE(r.all_pass()) << name << "\n" << r.summary();
    }
  // general λ as well
  GradedBialgebra T = build_tensor_hopf(corpus::hecke(Scalar(2), Scalar::zeta(4)), TensorVariant::shuffle_coproduct, 3);
  EXPECT_TRUE(check_graded_structure(T, StructureLevel::hopf).all_pass());
}

// [a+b over r] on X^a⊗X^b splits as Σ_{n+p=r} (id_n⊗λ^{mp}Ψ_{m,p}⊗id_q)([a over n]⊗[b over p]).
TEST(TensorHopf, ComultMultSplitting) {
  for (const auto& [name, X] : corpus::braidings()) {
    BraidRep rep(X);
    std::size_t d = X.dim();
    int top = d <= 2 ? 5 : 4;
    for (int a = 0; a <= top; ++a)
      for (int b = 0; a + b <= top; ++b)
        for (int r = 0; r <= a + b; ++r) {
          Matrix lhs = multinomial({r, a + b - r}, rep, ShuffleSide::upper);
          Matrix rhs(lhs.rows(), lhs.cols());
          for (int n = 0; n <= std::min(a, r); ++n) {
            int p = r - n, m = a - n, q = b - p;
            if (p < 0 || q < 0) continue;
            Matrix psi = X.lambda().pow(m * p) * block_braiding(m, p, rep);
            rhs += chain(Matrix::identity(lhs.cols()),
                         {{multinomial({n, m}, rep, ShuffleSide::upper), multinomial({p, q}, rep, ShuffleSide::upper)},
                          {I(tensor_power_dim(d, n)), psi, I(tensor_power_dim(d, q))}});
          }
          EXPECT_EQ(lhs, rhs) << name << " a=" << a << " b=" << b << " r=" << r;
        }
  }
}

TEST(Antisymmetrizer, Examples) {
  BraidedSpace X = corpus::hecke();
  GradedMap A = antisymmetrizer(X, 3);
  EXPECT_EQ(A[0], Matrix::identity(1));
  EXPECT_EQ(A[1], Matrix::identity(2));
  EXPECT_EQ(A[2], Matrix::identity(4) - X.psi());
  EXPECT_EQ(rank(antisymmetrizer(BraidedSpace::swap(3), 3)[3]), 1u);
}

TEST(Antisymmetrizer, IsHopfMorphismOnCorpus) {
  for (const auto& [name, X] : corpus::braidings()) {
    Report r = check_antisym_hopf_morphism(X, 4);
    EXPECT_TRUE(r.all_pass()) << name << "\n" << r.summary();
  }
}

TEST(Wedge, DimsExamples) {
  EXPECT_EQ(build_wedge(BraidedSpace::swap(2), 4).dims(), (std::vector<std::size_t>{1, 2, 1, 0, 0}));
  EXPECT_EQ(build_wedge(corpus::braided_line(Scalar::zeta(3)), 4).dims(), (std::vector<std::size_t>{1, 1, 1, 0, 0}));
  EXPECT_EQ(build_wedge(corpus::braided_line(Scalar(2)), 4).dims(), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
}

TEST(Wedge, SwapDimsAreBinomials) {
  for (int d = 1; d <= 3; ++d) {
    auto dims = build_wedge(BraidedSpace::swap(d), 4).dims();
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(dims[n], binom(d, n));
  }
}

TEST(Wedge, InducedStructureIsHopfAndUnique) {
  for (const auto& [name, X] : corpus::braidings()) {
    WedgeAlgebra W = build_wedge(X, 4);
    const GradedBialgebra& B = W.algebra;
    Report r = check_graded_structure(B, StructureLevel::hopf);
    EXPECT_TRUE(r.all_pass()) << name << "\n" << r.summary();
    BraidedSpace Xm = X.with_lambda(Scalar(-1));
    GradedBialgebra T = build_tensor_hopf(Xm, TensorVariant::shuffle_coproduct, 4);
    GradedBialgebra To = build_tensor_hopf(Xm, TensorVariant::shuffle_product, 4);
    EXPECT_TRUE(check_graded_morphism(W.coim, T, B).all_pass()) << name;
    EXPECT_TRUE(check_graded_morphism(W.im, B, To).all_pass()) << name;
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(compose(W.im[n], W.coim[n]), W.A[n]);
      // g ↦ im∘g∘(coim⊗coim) is injective exactly when these ranks are full
      EXPECT_EQ(rank(W.im[n]), W.im[n].cols());
      EXPECT_EQ(rank(W.coim[n]), W.coim[n].rows());
    }
    GradedBialgebra V = wedge_via_image(W, X);
    for (int k = 0; k <= 4; ++k)
      for (int l = 0; k + l <= 4; ++l) {
        EXPECT_EQ(V.m(k, l), B.m(k, l)) << name;
        EXPECT_EQ(V.delta(k, l), B.delta(k, l)) << name;
        EXPECT_EQ(V.braid[k][l], B.braid[k][l]) << name;
      }
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(V.antipode[n], B.antipode[n]);
    // generated in degree 1
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(rank(B.m(1, n - 1)), B.dims[n]) << name << " n=" << n;
  }
}

TEST(Wedge, QuadraticComparison) {
  QuadraticComparison line = wedge_vs_quadratic(corpus::braided_line(Scalar::zeta(3)), 4);
  EXPECT_EQ(line.wedge_dims, (std::vector<std::size_t>{1, 1, 1, 0, 0}));
  EXPECT_EQ(line.quadratic_dims, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(line.first_difference, 3);
  for (int d = 1; d <= 3; ++d) EXPECT_TRUE(wedge_vs_quadratic(BraidedSpace::swap(d), 4).equal()) << d;
  QuadraticComparison generic = wedge_vs_quadratic(corpus::braided_line(Scalar(2)), 4);
  EXPECT_TRUE(generic.equal());
  EXPECT_EQ(generic.wedge_dims, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
}
