#include <gtest/gtest.h>

#include "braidcalc/corpus.hpp"
#include "braidcalc/errors.hpp"
#include "braidcalc/graded.hpp"
#include "braidcalc/linalg.hpp"
#include "braidcalc/tensor.hpp"
#include "braidcalc/tensor_hopf.hpp"

using namespace braidcalc;

namespace {

// Upper triangular 2×2 matrices, basis E11, E12, E22.
struct UpperTriangular {
  Matrix mult{3, 9};
  Matrix unit = Matrix::column({Scalar(1), Scalar(0), Scalar(1)});
  UpperTriangular() {
    // E_ab E_cd = δ_bc E_ad; index of (a,d): 11->0, 12->1, 22->2
    int a_[3] = {0, 0, 1}, b_[3] = {0, 1, 1};
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        if (b_[x] == a_[y]) {
          int a = a_[x], d = b_[y];
          int idx = a == 0 ? (d == 0 ? 0 : 1) : 2;
          mult.set(idx, 3 * x + y, Scalar(1));
        }
  }
};

}  // namespace

TEST(Graded, TensorExamples) {
  EXPECT_EQ(graded_tensor(GradedSpace{1, 2, 0}, GradedSpace{1, 3, 0}), (GradedSpace{1, 5, 6}));
  GradedSpace x{2, 3, 1};
  EXPECT_EQ(graded_tensor(GradedSpace{1, 0, 0}, x), x);
  Matrix a{{1, 2}}, b{{3}, {4}};
  GradedMap f{Matrix::identity(1), a}, g{Matrix::identity(1), b};
  GradedMap fg = graded_tensor(f, g);
  EXPECT_EQ(fg[1], direct_sum(kron(Matrix::identity(1), b), kron(a, Matrix::identity(1))));
}

TEST(Graded, BraidingExamples) {
  BraidedSpace X = corpus::hecke();
  BraidRep rep(X);
  GradedSpace dims{1, 2, 4};
  BraidTable t(3);
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; k + l <= 2; ++l) t[k].push_back(block_braiding(k, l, rep));
  Scalar lambda = Scalar::zeta(5);
  GradedMap br = graded_braiding(dims, dims, t, lambda);
  // degree 2 summands: (0,2), (1,1), (2,0) of sizes 4, 4, 4
  EXPECT_EQ(br[2].block(4, 4, 4, 4), lambda * X.psi());
  EXPECT_EQ(br[2].block(8, 0, 4, 4), t[0][2]);
  EXPECT_EQ(br[2].block(0, 8, 4, 4), t[2][0]);
  EXPECT_THROW(graded_braiding(dims, dims, t, lambda, true), IncompatibleBraiding);
  EXPECT_NO_THROW(graded_braiding(dims, dims, t, Scalar(-1), true));

  // braided line: block (k,l) at λ = -1 is (-1)^{kl} q^{kl}
  Scalar q = Scalar::zeta(7);
  BraidRep lr(BraidedSpace::line(q));
  GradedSpace ones{1, 1, 1, 1, 1};
  BraidTable lt(5);
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; k + l <= 4; ++l) lt[k].push_back(block_braiding(k, l, lr));
  GradedMap lb = graded_braiding(ones, ones, lt, Scalar(-1));
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      int l = n - k;
      Scalar expect = (Scalar(-1) * q).pow(k * l);
      EXPECT_EQ(lb[n](l, k), expect);
    }
}

TEST(Graded, TensorHopfPassesAndMutationFails) {
  BraidedSpace X = BraidedSpace::swap(2);
  GradedBialgebra T = build_tensor_hopf(X, TensorVariant::shuffle_coproduct, 3);
  Report r = check_graded_structure(T, StructureLevel::hopf);
  EXPECT_TRUE(r.all_pass()) << r.summary();
  GradedBialgebra bad = T;
  bad.comult[1][1].set(1, 1, -bad.comult[1][1](1, 1));
  Report rb = check_graded_structure(bad, StructureLevel::bialgebra);
  EXPECT_FALSE(rb.passed("bialgebra"));
  EXPECT_NE(rb.checks["bialgebra"].first_failure.find("Δ(1,1)"), std::string::npos) << rb.summary();
}

TEST(Graded, TrivialCarrierPasses) {
  GradedBialgebra B = GradedBialgebra::with_dims({1, 0, 0});
  B.unit = B.counit = B.antipode.emplace_back(Matrix::identity(1));
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; k + l <= 2; ++l) {
      B.mult[k][l] = Matrix(B.dims[k + l], B.dims[k] * B.dims[l]);
      B.comult[k][l] = Matrix(B.dims[k] * B.dims[l], B.dims[k + l]);
    }
  B.mult[0][0] = B.comult[0][0] = Matrix::identity(1);
  B.antipode.push_back(Matrix(0, 0));
  B.antipode.push_back(Matrix(0, 0));
  B.diff = {Matrix(0, 1), Matrix(0, 0)};
  Report r = check_graded_structure(B, StructureLevel::diff_hopf);
  EXPECT_TRUE(r.all_pass()) << r.summary();
}

TEST(Graded, RecursiveAntipodeMatchesClosedForm) {
  for (const auto& [name, X] : corpus::braidings()) {
    if (X.dim() > 2) continue;
    for (const Scalar& lambda : {Scalar(-1), Scalar::zeta(3)}) {
      GradedBialgebra T = build_tensor_hopf(X.with_lambda(lambda), TensorVariant::shuffle_coproduct, 4);
      std::vector<Matrix> S = antipode_recursive(T);
      ASSERT_EQ(S.size(), 5u);
      EXPECT_EQ(S[0], T.antipode[0]);
      for (int n = 0; n <= 4; ++n) EXPECT_EQ(S[n], T.antipode[n]) << name << " n=" << n;
    }
  }
  GradedBialgebra T = build_tensor_hopf(BraidedSpace::swap(2), TensorVariant::shuffle_coproduct, 2);
  T.antipode[0] = Matrix::scalar(Scalar(2));
  EXPECT_THROW(antipode_recursive(T), InvalidBaseHopf);
}

TEST(Graded, GeneratedSubmodules) {
  UpperTriangular A;
  Matrix mu = A.mult;
  EXPECT_EQ(generated_left(mu, 3, Matrix(3, 1)).cols(), 0u);
  EXPECT_EQ(rank(generated_left(mu, 3, A.unit)), 3u);
  Matrix e12 = Matrix::unit_column(3, 1), e11 = Matrix::unit_column(3, 0), e22 = Matrix::unit_column(3, 2);
  // A·E12 = span(E12); E12·A = span(E12); A·E22 = span(E12, E22)
  EXPECT_EQ(generated_left(mu, 3, e12).cols(), 1u);
  EXPECT_EQ(generated_left(mu, 3, e22).cols(), 2u);
  EXPECT_EQ(generated_right(mu, 3, e22).cols(), 1u);
  EXPECT_EQ(generated_right(mu, 3, e11).cols(), 2u);
  for (const Matrix& f : {e11, e12, e22, Matrix(hstack({e11, e22}))}) {
    Matrix l = generated_left(mu, 3, f);
    EXPECT_EQ(generated_left(mu, 3, l), l);
    EXPECT_TRUE(span_contains(l, f));
    Matrix two = generated_two_sided(mu, mu, 3, f);
    EXPECT_TRUE(same_span(two, generated_right(mu, 3, generated_left(mu, 3, f))));
    EXPECT_TRUE(span_contains(two, l));
  }
}

TEST(Graded, IdealQuotientRejectsNonBiIdeal) {
  GradedBialgebra T = build_tensor_hopf(BraidedSpace::swap(2), TensorVariant::shuffle_coproduct, 3);
  // e1⊗e2 is not primitive, and the ideal has nothing in degree 1
  EXPECT_THROW(ideal_quotient(T, 2, Matrix::unit_column(4, 1)), NotABiIdeal);
  // the ideal generated by e1 is a Hopf ideal; the quotient is T of a line
  IdealQuotient q = ideal_quotient(T, 1, Matrix::unit_column(2, 0));
  EXPECT_EQ(q.quotient.dims, (GradedSpace{1, 1, 1, 1}));
  EXPECT_TRUE(check_graded_structure(q.quotient, StructureLevel::hopf).all_pass());
}
