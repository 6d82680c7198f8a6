#include "braidcalc/tensor_hopf.hpp"

#include "braidcalc/errors.hpp"
#include "braidcalc/linalg.hpp"
#include "braidcalc/tensor.hpp"

namespace braidcalc {

namespace {

Scalar sign(long long e) { return (e % 2) ? Scalar(-1) : Scalar(1); }

Matrix run(std::size_t n, const std::vector<Layer>& layers) {
  if (layers.empty()) return Matrix::identity(n);
  Matrix out = chain(layers);
  if (out.cols() != n) throw ShapeError("layer source does not match");
  return out;
}

}  // namespace

GradedBialgebra build_tensor_hopf(BraidRep& rep, TensorVariant variant, int N) {
  const BraidedSpace& X = rep.space();
  GradedSpace dims;
  for (int n = 0; n <= N; ++n) dims.push_back(tensor_power_dim(X.dim(), n));
  GradedBialgebra B = GradedBialgebra::with_dims(dims);
  B.lambda = X.lambda();
  B.unit = Matrix::identity(1);
  B.counit = Matrix::identity(1);
  for (int k = 0; k <= N; ++k)
    for (int l = 0; k + l <= N; ++l) {
      Matrix id = Matrix::identity(dims[k + l]);
      if (variant == TensorVariant::shuffle_coproduct) {
        B.mult[k][l] = id;
        B.comult[k][l] = multinomial({k, l}, rep, ShuffleSide::upper);
      } else {
        B.mult[k][l] = multinomial({k, l}, rep, ShuffleSide::lower);
        B.comult[k][l] = id;
      }
      B.braid[k][l] = block_braiding(k, l, rep);
    }
  for (int n = 0; n <= N; ++n) {
    long long c2 = static_cast<long long>(n) * (n - 1) / 2;
    B.antipode.push_back((sign(n) * X.lambda().pow(c2)) * rep.rep(Permutation::reversal(n)));
  }
  return B;
}

GradedBialgebra build_tensor_hopf(const BraidedSpace& X, TensorVariant variant, int N) {
  BraidRep rep(X);
  return build_tensor_hopf(rep, variant, N);
}

GradedMap antisymmetrizer(const BraidedSpace& X, int N) {
  BraidRep rep(X.with_lambda(Scalar(-1)));
  GradedMap A;
  for (int n = 0; n <= N; ++n) A.push_back(braided_factorial(n, rep));
  return A;
}

Report check_antisym_hopf_morphism(const BraidedSpace& X0, int N) {
  BraidedSpace X = X0.with_lambda(Scalar(-1));
  BraidRep rep(X);
  GradedBialgebra T = build_tensor_hopf(rep, TensorVariant::shuffle_coproduct, N);
  GradedBialgebra To = build_tensor_hopf(rep, TensorVariant::shuffle_product, N);
  GradedMap A;
  for (int n = 0; n <= N; ++n) A.push_back(braided_factorial(n, rep));
  Report r;
  r.record("algebra_morphism", true);
  r.record("coalgebra_morphism", true);
  r.record("antipode_morphism", true);
  for (int k = 0; k <= N; ++k)
    for (int l = 0; k + l <= N; ++l) {
      std::string where = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      std::size_t n = T.dims[k] * T.dims[l];
      Matrix lhs = run(n, {{A[k], A[l]}, {To.m(k, l)}});
      r.record("algebra_morphism", lhs == compose(A[k + l], T.m(k, l)), where);
      Matrix cl = run(T.dims[k + l], {{T.delta(k, l)}, {A[k], A[l]}});
      r.record("coalgebra_morphism", cl == compose(To.delta(k, l), A[k + l]), where);
    }
  for (int n = 0; n <= N; ++n)
    r.record("antipode_morphism", compose(To.antipode[n], A[n]) == compose(A[n], T.antipode[n]),
             "degree " + std::to_string(n));
  r.record("unit_counit", compose(A[0], T.unit) == To.unit && compose(To.counit, A[0]) == T.counit);
  return r;
}

WedgeAlgebra build_wedge(const BraidedSpace& X0, int N) {
  BraidedSpace X = X0.with_lambda(Scalar(-1));
  BraidRep rep(X);
  GradedBialgebra T = build_tensor_hopf(rep, TensorVariant::shuffle_coproduct, N);
  WedgeAlgebra W;
  GradedSpace dims;
  for (int n = 0; n <= N; ++n) {
    Matrix a = braided_factorial(n, rep);
    KernelImage ki = kernel_image(a);
    W.A.push_back(a);
    W.im.push_back(ki.image_basis);
    W.coim.push_back(ki.coimage_proj);
    dims.push_back(ki.image_basis.cols());
  }
  GradedBialgebra B = GradedBialgebra::with_dims(dims);
  B.lambda = Scalar(-1);
  const auto& im = W.im;
  const auto& co = W.coim;
  for (int k = 0; k <= N; ++k)
    for (int l = 0; k + l <= N; ++l) {
      // Â∘m = m°∘(Â⊗Â) and (Â⊗Â)∘Δ = Δ°∘Â with m = Δ° = id
      B.mult[k][l] = solve_factor(im[k + l], kron(co[k], co[l]), compose(W.A[k + l], T.m(k, l)));
      Matrix AA_delta = chain(T.delta(k, l), {{W.A[k], W.A[l]}});
      B.comult[k][l] = solve_factor(kron(im[k], im[l]), co[k + l], AA_delta);
      Matrix AA_psi = chain(T.braid[k][l], {{W.A[l], W.A[k]}});
      B.braid[k][l] = solve_factor(kron(im[l], im[k]), kron(co[k], co[l]), AA_psi);
    }
  for (int n = 0; n <= N; ++n)
    B.antipode.push_back(solve_factor(im[n], co[n], compose(W.A[n], T.antipode[n])));
  B.unit = compose(co[0], T.unit);
  B.counit = compose(T.counit, im[0]);
  W.algebra = std::move(B);
  return W;
}

GradedBialgebra wedge_via_image(const WedgeAlgebra& W, const BraidedSpace& X0) {
  BraidedSpace X = X0.with_lambda(Scalar(-1));
  BraidRep rep(X);
  const int N = W.algebra.N;
  GradedBialgebra To = build_tensor_hopf(rep, TensorVariant::shuffle_product, N);
  GradedBialgebra B = GradedBialgebra::with_dims(W.algebra.dims);
  B.lambda = Scalar(-1);
  const auto& im = W.im;
  for (int k = 0; k <= N; ++k)
    for (int l = 0; k + l <= N; ++l) {
      B.mult[k][l] = solve_left(im[k + l], chain(kron(im[k], im[l]), {{To.m(k, l)}}));
      B.comult[k][l] = solve_left(kron(im[k], im[l]), compose(To.delta(k, l), im[k + l]));
      B.braid[k][l] = solve_left(kron(im[l], im[k]), chain(kron(im[k], im[l]), {{To.braid[k][l]}}));
    }
  for (int n = 0; n <= N; ++n) B.antipode.push_back(solve_left(im[n], compose(To.antipode[n], im[n])));
  B.unit = solve_left(im[0], To.unit);
  B.counit = compose(To.counit, im[0]);
  return B;
}

QuadraticComparison wedge_vs_quadratic(const BraidedSpace& X0, int N) {
  BraidedSpace X = X0.with_lambda(Scalar(-1));
  QuadraticComparison c;
  c.wedge_dims = build_wedge(X, N).dims();
  if (N >= 2) {
    BraidRep rep(X);
    GradedBialgebra T = build_tensor_hopf(rep, TensorVariant::shuffle_coproduct, N);
    Matrix gens = kernel_basis(braided_factorial(2, rep));
    c.quadratic_dims = ideal_quotient(T, 2, gens).quotient.dims;
  } else {
    c.quadratic_dims = c.wedge_dims;
  }
  for (int n = 0; n <= N; ++n)
    if (c.wedge_dims[n] != c.quadratic_dims[n]) {
      c.first_difference = n;
      break;
    }
  return c;
}

}  // namespace braidcalc
