#include "braidcalc/projection.hpp"

#include "braidcalc/braided_space.hpp"
#include "braidcalc/errors.hpp"
#include "braidcalc/linalg.hpp"
#include "braidcalc/tensor.hpp"

namespace braidcalc {

namespace {

HopfAlgebraData degree_zero(const BialgebraProjection& P) {
  HopfAlgebraData A;
  A.dim = P.B.dims[0];
  A.mult = P.B.m(0, 0);
  A.comult = P.B.delta(0, 0);
  A.unit = P.B.unit;
  A.counit = P.B.counit;
  return A;
}

HopfBimodule piece(const BialgebraProjection& P, int n) {
  const GradedBialgebra& B = P.B;
  const std::size_t d = B.dims[n];
  Matrix id = Matrix::identity(d);
  HopfBimodule X;
  X.name = "B" + std::to_string(n);
  X.dim = d;
  X.mu_l = compose(B.m(0, n), kron(P.eta_bar, id));
  X.mu_r = compose(B.m(n, 0), kron(id, P.eta_bar));
  X.nu_l = compose(kron(P.eps_bar, id), B.delta(0, n));
  X.nu_r = compose(kron(id, P.eps_bar), B.delta(n, 0));
  return X;
}

}  // namespace

Report check_projection(const BialgebraProjection& P) {
  Report r;
  const HopfAlgebraData& H = P.H;
  const GradedBialgebra& B = P.B;
  const std::size_t b = B.dims[0];
  bool shapes = P.eta_bar.rows() == b && P.eta_bar.cols() == H.dim && P.eps_bar.rows() == H.dim &&
                P.eps_bar.cols() == b;
  r.record("shapes", shapes);
  if (!shapes) return r;
  HopfAlgebraData A = degree_zero(P);
  auto morphism = [&](const std::string& name, const Matrix& f, const Matrix& m1, const Matrix& d1, const Matrix& u1,
                      const Matrix& c1, const Matrix& m2, const Matrix& d2, const Matrix& u2, const Matrix& c2) {
    record_equal(r, name, compose(f, m1), compose(m2, kron(f, f)), "mult");
    record_equal(r, name, compose(d2, f), compose(kron(f, f), d1), "comult");
    record_equal(r, name, compose(f, u1), u2, "unit");
    record_equal(r, name, compose(c2, f), c1, "counit");
  };
  morphism("eta_bar", P.eta_bar, H.mult, H.comult, H.unit, H.counit, A.mult, A.comult, A.unit, A.counit);
  morphism("eps_bar", P.eps_bar, A.mult, A.comult, A.unit, A.counit, H.mult, H.comult, H.unit, H.counit);
  record_equal(r, "retraction", compose(P.eps_bar, P.eta_bar), Matrix::identity(H.dim));
  return r;
}

BimoduleBialgebra projection_to_bimodule(const BialgebraProjection& P) {
  const HopfAlgebraData& H = P.H;
  const GradedBialgebra& B = P.B;
  const int N = B.N;
  const std::size_t h = H.dim;
  BimoduleBialgebra U;
  U.H = H;
  U.N = N;
  U.eta_bar = P.eta_bar;
  U.eps_bar = P.eps_bar;
  for (int n = 0; n <= N; ++n) U.pieces.push_back(piece(P, n));
  U.tensors.assign(N + 1, {});
  U.mult.assign(N + 1, {});
  U.comult.assign(N + 1, {});
  for (int k = 0; k <= N; ++k)
    for (int l = 0; k + l <= N; ++l) {
      const HopfBimodule &X = U.pieces[k], &Y = U.pieces[l];
      TensorOverH t = tensor_over_H(H, X, Y);
      const Matrix& m = B.m(k, l);
      // m factors through λ exactly when it is H-balanced
      Matrix left = chain({{X.mu_r, I(Y.dim)}}), right = chain({{I(X.dim), Y.mu_l}});
      if (compose(m, left) != compose(m, right))
        throw FactorizationError("multiplication (" + std::to_string(k) + "," + std::to_string(l) +
                                 ") is not H-balanced");
      (void)h;
      U.mult[k].push_back(compose(m, t.section));
      U.comult[k].push_back(solve_left(t.rho, B.delta(k, l)));
      U.tensors[k].push_back(std::move(t));
    }
  if (B.has_antipode())
    for (int n = 0; n <= N; ++n) {
      const HopfBimodule& X = U.pieces[n];
      // b ↦ b_{-1}·S(b_0)·b_1
      U.antipode.push_back(chain({{X.nu_l}, {I(h), X.nu_r}, {I(h), B.antipode[n], I(h)}, {I(h), X.mu_r}, {X.mu_l}}));
    }
  return U;
}

BialgebraProjection projection_to_plain(const BimoduleBialgebra& U) {
  BialgebraProjection P;
  P.H = U.H;
  P.eta_bar = U.eta_bar;
  P.eps_bar = U.eps_bar;
  GradedSpace dims;
  for (const auto& X : U.pieces) dims.push_back(X.dim);
  P.B = GradedBialgebra::with_dims(dims);
  for (int k = 0; k <= U.N; ++k)
    for (int l = 0; k + l <= U.N; ++l) {
      P.B.mult[k][l] = compose(U.mult[k][l], U.tensors[k][l].lambda);
      P.B.comult[k][l] = compose(U.tensors[k][l].rho, U.comult[k][l]);
    }
  P.B.unit = compose(U.eta_bar, U.H.unit);
  P.B.counit = compose(U.H.counit, U.eps_bar);
  if (!U.antipode.empty())
    for (int n = 0; n <= U.N; ++n)
      P.B.antipode.push_back(compose(U.antipode[n], relative_antipode(U.H, U.pieces[n])));
  return P;
}

HopfWedge wedge_over_H(const HopfAlgebraData& H, const HopfBimodule& X, int N) {
  if (N < 0) throw InvalidInput("wedge_over_H: N must be non-negative");
  const std::size_t h = H.dim;
  HopfWedge out;
  out.coinv = coinvariants(H, X);
  const CrossedModule& M = out.coinv.module;
  const std::size_t m = M.dim;
  tensor_power_dim(m, N);  // resource bound

  // T^∧(M) in the crossed-module category
  std::vector<std::size_t> wdims;
  if (m == 0) {
    out.braiding = Matrix(0, 0);
    wdims.assign(N + 1, 0);
    wdims[0] = 1;
  } else {
    out.braiding = yd_braiding(H, M, M);
    BraidedSpace Y(m, out.braiding, Scalar(-1));
    out.W = build_wedge(Y, N);
    wdims = out.W.dims();
  }

  // crossed structure of W_n ⊂ M^{⊗n}
  CrossedModule power = trivial_crossed(H);
  for (int n = 0; n <= N; ++n) {
    if (n > 0 && m > 0) power = crossed_tensor(H, power, M);
    CrossedModule C;
    C.name = "W" + std::to_string(n);
    C.dim = wdims[n];
    if (n == 0) {
      C = trivial_crossed(H);
    } else if (C.dim > 0) {
      const Matrix& im = out.W.im[n];
      C.act = solve_left(im, compose(power.act, kron(im, Matrix::identity(h))));
      C.coact = solve_left(kron(im, Matrix::identity(h)), compose(power.coact, im));
    } else {
      C.act = Matrix(0, 0);
      C.coact = Matrix(0, 0);
    }
    out.components.push_back(C);
  }

  GradedSpace bdims;
  for (int n = 0; n <= N; ++n) bdims.push_back(h * wdims[n]);
  GradedBialgebra& B = out.B;
  B = GradedBialgebra::with_dims(bdims);
  B.lambda = Scalar(-1);
  for (int n = 0; n <= N; ++n) out.pieces.push_back(smash(H, out.components[n]));

  // J_{k,l}(a⊗w⊗w') = λ(a⊗w ⊗ 1⊗w') identifies H⊗W_k⊗W_l with B_k⊗_H B_l
  auto wmult = [&](int k, int l) -> Matrix {
    if (m == 0) return Matrix::identity(1);
    return out.W.algebra.m(k, l);
  };
  auto wcomult = [&](int k, int l) -> Matrix {
    if (m == 0) return Matrix::identity(1);
    return out.W.algebra.delta(k, l);
  };
  for (int k = 0; k <= N; ++k)
    for (int l = 0; k + l <= N; ++l) {
      const std::size_t wk = wdims[k], wl = wdims[l], wkl = wdims[k + l];
      if (wk == 0 || wl == 0) {
        B.mult[k][l] = Matrix(h * wkl, h * wk * h * wl);
        B.comult[k][l] = Matrix(h * wk * h * wl, h * wkl);
        continue;
      }
      TensorOverH t = tensor_over_H(H, out.pieces[k], out.pieces[l]);
      Coinvariants cl = coinvariants(H, out.pieces[l]);
      Matrix iota = compose(cl.proj, kron(H.unit, Matrix::identity(wl)));  // W_l ≅ coinvariants of B_l
      Matrix J = kron(Matrix::identity(h * wk), iota);
      Matrix Jinv = kron(Matrix::identity(h * wk), inverse(iota));
      Matrix mw = wkl == 0 ? Matrix(0, wk * wl) : wmult(k, l);
      Matrix dw = wkl == 0 ? Matrix(wk * wl, 0) : wcomult(k, l);
      B.mult[k][l] = compose({kron(Matrix::identity(h), mw), Jinv, t.lambda});
      B.comult[k][l] = compose({t.rho, J, kron(Matrix::identity(h), dw)});
    }
  B.unit = H.unit;
  B.counit = H.counit;
  B.antipode.assign(1, H.antipode);
  B.antipode = antipode_recursive(B);

  // degree 1 in the basis of X
  out.to_smash.assign(N + 1, Matrix());
  for (int n = 0; n <= N; ++n) out.to_smash[n] = Matrix::identity(bdims[n]);
  if (N >= 1 && m > 0) {
    Matrix g = compose(kappa(H, X, out.coinv), kron(Matrix::identity(h), out.W.im[1]));  // H⊗W_1 → X
    Matrix ginv = inverse(g);
    std::vector<Matrix> to(N + 1), from(N + 1);
    for (int n = 0; n <= N; ++n) to[n] = from[n] = Matrix::identity(bdims[n]);
    to[1] = g;
    from[1] = ginv;
    for (int k = 0; k <= N; ++k)
      for (int l = 0; k + l <= N; ++l) {
        if (k != 1 && l != 1 && k + l != 1) continue;
        B.mult[k][l] = compose({to[k + l], B.mult[k][l], kron(from[k], from[l])});
        B.comult[k][l] = compose({kron(to[k], to[l]), B.comult[k][l], from[k + l]});
      }
    B.antipode[1] = compose({g, B.antipode[1], ginv});
    out.pieces[1] = X;
    out.to_smash[1] = ginv;
  }
  return out;
}

}  // namespace braidcalc
