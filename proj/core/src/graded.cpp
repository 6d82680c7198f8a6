#include "braidcalc/graded.hpp"

#include <string>

#include "braidcalc/errors.hpp"
#include "braidcalc/linalg.hpp"
#include "braidcalc/tensor.hpp"

namespace braidcalc {

namespace {

std::string at(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
std::string at(int a, int b, int c) { return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")"; }

Matrix run(std::size_t n, const std::vector<Layer>& layers) {
  if (layers.empty()) return Matrix::identity(n);
  Matrix out = chain(layers);
  if (out.cols() != n) throw ShapeError("layer source does not match");
  return out;
}

Scalar sign(int e) { return (e % 2) ? Scalar(-1) : Scalar(1); }

}  // namespace

GradedSpace graded_tensor(const GradedSpace& x, const GradedSpace& y) {
  if (x.size() != y.size()) throw ShapeError("graded_tensor: truncations differ");
  GradedSpace out(x.size(), 0);
  for (std::size_t n = 0; n < x.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) out[n] += x[k] * y[n - k];
  return out;
}

GradedMap graded_tensor(const GradedMap& f, const GradedMap& g) {
  if (f.size() != g.size()) throw ShapeError("graded_tensor: truncations differ");
  GradedMap out;
  for (std::size_t n = 0; n < f.size(); ++n) {
    Matrix b;
    bool first = true;
    for (std::size_t k = 0; k <= n; ++k) {
      Matrix kk = kron(f[k], g[n - k]);
      b = first ? kk : direct_sum(b, kk);
      first = false;
    }
    out.push_back(b);
  }
  return out;
}

BraidTable swap_table(const GradedSpace& x, const GradedSpace& y) {
  BraidTable t(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t l = 0; k + l < x.size(); ++l) t[k].push_back(swap_matrix(x[k], y[l]));
  return t;
}

GradedMap graded_braiding(const GradedSpace& x, const GradedSpace& y, const BraidTable& psi, const Scalar& lambda,
                          bool with_differential) {
  if (with_differential && lambda != Scalar(-1))
    throw IncompatibleBraiding("a differential forces lambda = -1");
  GradedSpace xy = graded_tensor(x, y), yx = graded_tensor(y, x);
  GradedMap out;
  for (std::size_t n = 0; n < x.size(); ++n) {
    Matrix b(yx[n], xy[n]);
    std::size_t src = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t l = n - k;
      std::size_t dst = 0;
      for (std::size_t i = 0; i < l; ++i) dst += y[i] * x[n - i];
      Matrix blk = psi[k][l];
      if (blk.rows() != y[l] * x[k] || blk.cols() != x[k] * y[l]) throw ShapeError("graded_braiding: block shape");
      b.set_block(dst, src, lambda.pow(static_cast<long long>(k * l)) * blk);
      src += x[k] * y[l];
    }
    out.push_back(b);
  }
  return out;
}

Matrix GradedBialgebra::weighted_braid(int k, int l) const {
  if (k == 0 || l == 0 || lambda.is_one()) return braid[k][l];
  return lambda.pow(static_cast<long long>(k) * l) * braid[k][l];
}

GradedBialgebra GradedBialgebra::with_dims(GradedSpace dims) {
  GradedBialgebra B;
  B.N = static_cast<int>(dims.size()) - 1;
  B.dims = std::move(dims);
  B.mult.assign(B.N + 1, {});
  B.comult.assign(B.N + 1, {});
  for (int k = 0; k <= B.N; ++k) {
    B.mult[k].resize(B.N + 1 - k);
    B.comult[k].resize(B.N + 1 - k);
  }
  B.braid = swap_table(B.dims, B.dims);
  return B;
}

Report check_graded_structure(const GradedBialgebra& B, StructureLevel level) {
  Report rep;
  const int N = B.N;
  const auto& d = B.dims;
  auto I_ = [&](int n) { return I(d[n]); };
  bool alg = level != StructureLevel::coalgebra;
  bool coalg = level != StructureLevel::algebra;
  bool bialg = level >= StructureLevel::bialgebra;
  bool hopf = level >= StructureLevel::hopf;
  bool diff = level == StructureLevel::diff_hopf;

  if (alg) {
    rep.record("assoc", true);
    for (int k = 0; k <= N; ++k)
      for (int l = 0; k + l <= N; ++l)
        for (int p = 0; k + l + p <= N; ++p) {
          Matrix lhs = run(d[k] * d[l] * d[p], {{B.m(k, l), I_(p)}, {B.m(k + l, p)}});
          Matrix rhs = run(d[k] * d[l] * d[p], {{I_(k), B.m(l, p)}, {B.m(k, l + p)}});
          rep.record("assoc", lhs == rhs, at(k, l, p));
        }
    rep.record("unit", true);
    for (int k = 0; k <= N; ++k) {
      Matrix left = chain(kron(B.unit, Matrix::identity(d[k])), {{B.m(0, k)}});
      Matrix right = chain(kron(Matrix::identity(d[k]), B.unit), {{B.m(k, 0)}});
      rep.record("unit", left.is_identity() && right.is_identity(), "degree " + std::to_string(k));
    }
  }
  if (coalg) {
    rep.record("coassoc", true);
    for (int k = 0; k <= N; ++k)
      for (int l = 0; k + l <= N; ++l)
        for (int p = 0; k + l + p <= N; ++p) {
          std::size_t n = d[k + l + p];
          Matrix lhs = run(n, {{B.delta(k + l, p)}, {B.delta(k, l), I_(p)}});
          Matrix rhs = run(n, {{B.delta(k, l + p)}, {I_(k), B.delta(l, p)}});
          rep.record("coassoc", lhs == rhs, at(k, l, p));
        }
    rep.record("counit", true);
    for (int k = 0; k <= N; ++k) {
      Matrix left = compose(kron(B.counit, Matrix::identity(d[k])), B.delta(0, k));
      Matrix right = compose(kron(Matrix::identity(d[k]), B.counit), B.delta(k, 0));
      rep.record("counit", left.is_identity() && right.is_identity(), "degree " + std::to_string(k));
    }
  }
  if (bialg) {
    rep.record("bialgebra", true);
    for (int p = 0; p <= N; ++p)
      for (int q = 0; p + q <= N; ++q)
        for (int r = 0; r <= p + q; ++r) {
          int s = p + q - r;
          Matrix lhs = compose(B.delta(r, s), B.m(p, q));
          Matrix rhs(lhs.rows(), lhs.cols());
          for (int p1 = 0; p1 <= p; ++p1) {
            int q1 = r - p1, p2 = p - p1, q2 = q - q1;
            if (q1 < 0 || q2 < 0) continue;
            rhs += run(d[p] * d[q], {{B.delta(p1, p2), B.delta(q1, q2)},
                                     {I_(p1), B.weighted_braid(p2, q1), I_(q2)},
                                     {B.m(p1, q1), B.m(p2, q2)}});
          }
          rep.record("bialgebra", lhs == rhs, "m" + at(p, q) + " Δ" + at(r, s));
        }
    Matrix dm = compose(B.delta(0, 0), B.unit);
    rep.record("bialgebra_unit", dm == kron(B.unit, B.unit), "Δη");
    rep.record("bialgebra_unit", compose(B.counit, B.m(0, 0)) == kron(B.counit, B.counit), "εm");
    rep.record("bialgebra_unit", compose(B.counit, B.unit) == Matrix::scalar(Scalar(1)), "εη");
  }
  if (hopf) {
    if (!B.has_antipode()) {
      rep.record("antipode", false, "missing");
    } else {
      rep.record("antipode", true);
      for (int n = 0; n <= N; ++n) {
        Matrix l(d[n], d[n]), r(d[n], d[n]);
        for (int k = 0; k <= n; ++k) {
          l += run(d[n], {{B.delta(k, n - k)}, {B.antipode[k], I_(n - k)}, {B.m(k, n - k)}});
          r += run(d[n], {{B.delta(k, n - k)}, {I_(k), B.antipode[n - k]}, {B.m(k, n - k)}});
        }
        Matrix expect = n == 0 ? compose(B.unit, B.counit) : Matrix(d[n], d[n]);
        rep.record("antipode", l == expect, "m(S⊗id)Δ degree " + std::to_string(n));
        rep.record("antipode", r == expect, "m(id⊗S)Δ degree " + std::to_string(n));
      }
    }
  }
  if (diff) {
    if (!B.has_diff()) {
      rep.record("d_squared", false, "missing differential");
      return rep;
    }
    rep.record("lambda", B.lambda == Scalar(-1), "differential requires lambda = -1");
    rep.record("d_squared", true);
    for (int n = 0; n + 2 <= N; ++n)
      rep.record("d_squared", compose(B.diff[n + 1], B.diff[n]).is_zero(), "degree " + std::to_string(n));
    rep.record("d_unit", compose(B.diff[0], B.unit).is_zero(), "d_0η");
    rep.record("leibniz", true);
    for (int k = 0; k <= N; ++k)
      for (int l = 0; k + l + 1 <= N; ++l) {
        Matrix lhs = compose(B.diff[k + l], B.m(k, l));
        Matrix rhs = run(d[k] * d[l], {{B.diff[k], I_(l)}, {B.m(k + 1, l)}}) +
                     sign(k) * run(d[k] * d[l], {{I_(k), B.diff[l]}, {B.m(k, l + 1)}});
        rep.record("leibniz", lhs == rhs, at(k, l));
      }
    rep.record("comul_diff", true);
    for (int r = 0; r <= N; ++r)
      for (int s = 0; r + s <= N; ++s) {
        if (r + s == 0) continue;
        int n = r + s - 1;
        Matrix lhs = compose(B.delta(r, s), B.diff[n]);
        Matrix rhs(lhs.rows(), lhs.cols());
        if (r >= 1) rhs += run(d[n], {{B.delta(r - 1, s)}, {B.diff[r - 1], I_(s)}});
        if (s >= 1) rhs += sign(r) * run(d[n], {{B.delta(r, s - 1)}, {I_(r), B.diff[s - 1]}});
        rep.record("comul_diff", lhs == rhs, "Δ" + at(r, s));
      }
    if (B.has_antipode()) {
      rep.record("antipode_diff", true);
      for (int n = 0; n + 1 <= N; ++n)
        rep.record("antipode_diff", compose(B.antipode[n + 1], B.diff[n]) == compose(B.diff[n], B.antipode[n]),
                   "degree " + std::to_string(n));
    }
  }
  return rep;
}

Report check_graded_morphism(const GradedMap& f, const GradedBialgebra& A, const GradedBialgebra& B) {
  Report r;
  const int N = A.N;
  if (B.N != N || static_cast<int>(f.size()) != N + 1) throw ShapeError("check_graded_morphism: truncations differ");
  r.record("mult", true);
  r.record("comult", true);
  for (int k = 0; k <= N; ++k)
    for (int l = 0; k + l <= N; ++l) {
      Matrix lhs = run(A.dims[k] * A.dims[l], {{f[k], f[l]}, {B.m(k, l)}});
      r.record("mult", lhs == compose(f[k + l], A.m(k, l)), at(k, l));
      Matrix cl = run(A.dims[k + l], {{A.delta(k, l)}, {f[k], f[l]}});
      r.record("comult", cl == compose(B.delta(k, l), f[k + l]), at(k, l));
    }
  r.record("unit", compose(f[0], A.unit) == B.unit);
  r.record("counit", compose(B.counit, f[0]) == A.counit);
  if (A.has_antipode() && B.has_antipode()) {
    r.record("antipode", true);
    for (int n = 0; n <= N; ++n)
      r.record("antipode", compose(B.antipode[n], f[n]) == compose(f[n], A.antipode[n]), "degree " + std::to_string(n));
  }
  if (A.has_diff() && B.has_diff()) {
    r.record("diff", true);
    for (int n = 0; n < N; ++n)
      r.record("diff", compose(B.diff[n], f[n]) == compose(f[n + 1], A.diff[n]), "degree " + std::to_string(n));
  }
  return r;
}

std::vector<Matrix> antipode_recursive(const GradedBialgebra& B) {
  if (!B.has_antipode()) throw InvalidBaseHopf("S_0 missing");
  const auto& d = B.dims;
  const Matrix& S0 = B.antipode[0];
  Matrix ee = compose(B.unit, B.counit);
  Matrix l = run(d[0], {{B.delta(0, 0)}, {S0, I(d[0])}, {B.m(0, 0)}});
  Matrix r = run(d[0], {{B.delta(0, 0)}, {I(d[0]), S0}, {B.m(0, 0)}});
  if (l != ee || r != ee) throw InvalidBaseHopf("S_0 is not an antipode of the degree-0 component");
  std::vector<Matrix> S{S0};
  for (int n = 1; n <= B.N; ++n) {
    Matrix acc(d[n], d[n]);
    for (int k = 1; k <= n; ++k)
      acc += run(d[n], {{B.delta(0, n)},
                        {I(d[0]), B.delta(k, n - k)},
                        {S0, I(d[k]), S[n - k]},
                        {I(d[0]), B.m(k, n - k)},
                        {B.m(0, n)}});
    S.push_back(-acc);
  }
  return S;
}

Matrix generated_left(const Matrix& mu_l, std::size_t dim_a, const Matrix& f) {
  if (mu_l.cols() != dim_a * f.rows()) throw ShapeError("generated_left: shape");
  return image_basis(chain(kron(Matrix::identity(dim_a), f), {{mu_l}}));
}

Matrix generated_right(const Matrix& mu_r, std::size_t dim_a, const Matrix& f) {
  if (mu_r.cols() != dim_a * f.rows()) throw ShapeError("generated_right: shape");
  return image_basis(chain(kron(f, Matrix::identity(dim_a)), {{mu_r}}));
}

Matrix generated_two_sided(const Matrix& mu_l, const Matrix& mu_r, std::size_t dim_a, const Matrix& f) {
  return generated_left(mu_l, dim_a, generated_right(mu_r, dim_a, f));
}

IdealQuotient ideal_quotient(const GradedBialgebra& B, int k, const Matrix& f) {
  const int N = B.N;
  const auto& d = B.dims;
  if (k < 0 || k > N || f.rows() != d[k]) throw ShapeError("ideal_quotient: generator shape");
  IdealQuotient out;
  out.ideal.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    std::vector<Matrix> spans;
    if (n >= k)
      for (int a = 0; a + k <= n; ++a) {
        int b = n - a - k;
        Matrix gen = chain(kron({Matrix::identity(d[a]), f, Matrix::identity(d[b])}),
                           {{I(d[a]), I(d[k]), I(d[b])}, {B.m(a, k), I(d[b])}, {B.m(a + k, b)}});
        spans.push_back(gen);
      }
    out.ideal[n] = spans.empty() ? Matrix(d[n], 0) : image_basis(hstack(spans));
    Matrix proj = kernel_image(out.ideal[n]).cokernel_proj;
    if (out.ideal[n].cols() == 0) proj = Matrix::identity(d[n]);
    out.projection.push_back(proj);
  }
  GradedSpace qd;
  for (int n = 0; n <= N; ++n) qd.push_back(out.projection[n].rows());
  GradedBialgebra Q = GradedBialgebra::with_dims(qd);
  Q.lambda = B.lambda;
  const auto& P = out.projection;
  auto descend = [&](const char* what, auto&& fn) {
    try {
      fn();
    } catch (const FactorizationError& e) {
      throw NotABiIdeal(std::string(what) + " does not descend to the quotient: " + e.what());
    }
  };
  for (int a = 0; a <= N; ++a)
    for (int b = 0; a + b <= N; ++b) {
      descend("multiplication", [&] {
        Q.mult[a][b] = solve_right(kron(P[a], P[b]), compose(P[a + b], B.m(a, b)));
      });
      descend("comultiplication", [&] {
        Q.comult[a][b] = solve_right(P[a + b], compose(kron(P[a], P[b]), B.delta(a, b)));
      });
      descend("braiding", [&] {
        Q.braid[a][b] = solve_right(kron(P[a], P[b]), compose(kron(P[b], P[a]), B.braid[a][b]));
      });
    }
  Q.unit = compose(P[0], B.unit);
  descend("counit", [&] { Q.counit = solve_right(P[0], B.counit); });
  if (B.has_antipode())
    for (int n = 0; n <= N; ++n)
      descend("antipode", [&] { Q.antipode.push_back(solve_right(P[n], compose(P[n], B.antipode[n]))); });
  if (B.has_diff())
    for (int n = 0; n < N; ++n)
      descend("differential", [&] { Q.diff.push_back(solve_right(P[n], compose(P[n + 1], B.diff[n]))); });
  out.quotient = std::move(Q);
  return out;
}

}  // namespace braidcalc
