#include "braidcalc/calculus.hpp"

#include <algorithm>

#include "braidcalc/errors.hpp"
#include "braidcalc/linalg.hpp"
#include "braidcalc/tensor.hpp"

namespace braidcalc {

namespace {

Matrix id(std::size_t n) { return Matrix::identity(n); }

Matrix run(std::size_t n, const std::vector<Layer>& layers) {
  if (layers.empty()) return id(n);
  Matrix out = chain(layers);
  if (out.cols() != n) throw ShapeError("layer source does not match");
  return out;
}

Scalar sign(int e) { return (e % 2) ? Scalar(-1) : Scalar(1); }

std::string deg(int n) { return "degree " + std::to_string(n); }

// Column span of f inside a space of dimension n, with an explicit basis even
// when f is empty.
Matrix span_of(const Matrix& f, std::size_t n) {
  if (f.cols() == 0 || n == 0) return Matrix(n, 0);
  return image_basis(f);
}

bool spans_all(const Matrix& f, std::size_t n) { return n == 0 || (f.cols() > 0 && rank(f) == n); }

// q: V → V/N and a section s with q∘s = id, q∘N = 0.
struct Quotient {
  Matrix q, s;
};
Quotient quotient_by(const Matrix& N, std::size_t n) {
  const std::size_t k = N.cols();
  if (k == 0) return {id(n), id(n)};
  Rref r = rref(hstack({N, id(n)}));
  std::vector<std::size_t> comp;
  for (std::size_t p : r.pivots)
    if (p >= k) comp.push_back(p - k);
  Matrix s = id(n).select_cols(comp);
  Matrix full_inv = inverse(hstack({N, s}));
  return {full_inv.block(k, 0, n - k, n), s};
}

// Restrictions of maps to a sub-object with basis columns `sub`.
Matrix restrict_endo(const Matrix& f, const Matrix& src, const Matrix& dst) {
  return solve_left(dst, compose(f, src));
}

// Leibniz on a first order calculus: d∘m = μ_r(d⊗id) + μ_l(id⊗d).
Matrix leibniz_rhs(const FirstOrderCalculus& c) {
  const std::size_t h = c.H.dim;
  return run(h * h, {{c.d, I(h)}, {c.X.mu_r}}) + run(h * h, {{I(h), c.d}, {c.X.mu_l}});
}

void record_generation(Report& rep, const GradedBialgebra& A) {
  const auto& d = A.dims;
  const std::size_t h = d[0];
  for (const char* name : {"gen_left", "gen_right", "gen_two_sided", "gen_products", "gen_agree"})
    rep.record(name, true);
  // m^{(n)}(d_0⊗…⊗d_0): H^{⊗(n+1)} → A_{n+1}, built up degree by degree
  Matrix prod = A.diff[0];
  std::size_t hp = h;
  for (int n = 0; n < A.N; ++n) {
    const std::size_t t = d[n + 1];
    if (n > 0) {
      hp *= h;
      prod = run(hp, {{prod, A.diff[0]}, {A.m(n, 1)}});
    }
    bool left = spans_all(chain(kron(id(h), A.diff[n]), {{A.m(0, n + 1)}}), t);
    bool right = spans_all(chain(kron(A.diff[n], id(h)), {{A.m(n + 1, 0)}}), t);
    bool two = spans_all(generated_left(A.m(0, n + 1), h, generated_right(A.m(n + 1, 0), h, A.diff[n])), t);
    bool prods = spans_all(generated_left(A.m(0, n + 1), h, prod), t);
    rep.record("gen_left", left, deg(n));
    rep.record("gen_right", right, deg(n));
    rep.record("gen_two_sided", two, deg(n));
    rep.record("gen_products", prods, deg(n));
    rep.record("gen_agree", left == right && right == two && two == prods, deg(n));
  }
}

}  // namespace

GradedBialgebra as_graded(const FirstOrderCalculus& c) {
  const HopfAlgebraData& H = c.H;
  GradedBialgebra A = GradedBialgebra::with_dims({H.dim, c.X.dim});
  A.lambda = Scalar(-1);
  A.mult[0][0] = H.mult;
  A.mult[0][1] = c.X.mu_l;
  A.mult[1][0] = c.X.mu_r;
  A.comult[0][0] = H.comult;
  A.comult[0][1] = c.X.nu_l;
  A.comult[1][0] = c.X.nu_r;
  A.unit = H.unit;
  A.counit = H.counit;
  A.diff = {c.d};
  A.antipode = {H.antipode};
  A.antipode = antipode_recursive(A);
  return A;
}

Report verify_calculus(const FirstOrderCalculus& c, CalculusLevel level) {
  if (level == CalculusLevel::diff_algebra || level == CalculusLevel::diff_hopf)
    return verify_calculus(as_graded(c), level);
  Report rep;
  const std::size_t h = c.H.dim, x = c.X.dim;
  if (c.d.rows() != x || c.d.cols() != h) {
    rep.record("shapes", false, "d must map H to X");
    return rep;
  }
  rep.record("leibniz", compose(c.d, c.H.mult) == leibniz_rhs(c));
  rep.record("surjective", spans_all(chain(kron(id(h), c.d), {{c.X.mu_l}}), x), "Im μ_l(id⊗d) ≠ X");
  if (level == CalculusLevel::bicovariant) {
    rep.record("left_covariant", compose(c.X.nu_l, c.d) == run(h, {{c.H.comult}, {I(h), c.d}}));
    rep.record("right_covariant", compose(c.X.nu_r, c.d) == run(h, {{c.H.comult}, {c.d, I(h)}}));
  }
  return rep;
}

Report verify_calculus(const GradedBialgebra& A, CalculusLevel level) {
  Report rep;
  if (!A.has_diff() || static_cast<int>(A.diff.size()) != A.N) {
    rep.record("d_squared", false, "missing differential");
    return rep;
  }
  const auto& d = A.dims;
  if (level == CalculusLevel::diff_hopf) {
    rep.merge(check_graded_structure(A, StructureLevel::diff_hopf));
  } else {
    rep.merge(check_graded_structure(A, StructureLevel::algebra));
    rep.record("d_squared", true);
    for (int n = 0; n + 2 <= A.N; ++n)
      rep.record("d_squared", compose(A.diff[n + 1], A.diff[n]).is_zero(), deg(n));
    rep.record("d_unit", compose(A.diff[0], A.unit).is_zero(), "d_0η");
    rep.record("leibniz", true);
    for (int k = 0; k <= A.N; ++k)
      for (int l = 0; k + l + 1 <= A.N; ++l) {
        Matrix lhs = compose(A.diff[k + l], A.m(k, l));
        Matrix rhs = run(d[k] * d[l], {{A.diff[k], I(d[l])}, {A.m(k + 1, l)}}) +
                     sign(k) * run(d[k] * d[l], {{I(d[k]), A.diff[l]}, {A.m(k, l + 1)}});
        rep.record("leibniz", lhs == rhs, "(" + std::to_string(k) + "," + std::to_string(l) + ")");
      }
    if (level == CalculusLevel::bicovariant) {
      rep.record("left_covariant", true);
      rep.record("right_covariant", true);
      for (int n = 0; n < A.N; ++n) {
        rep.record("left_covariant",
                   compose(A.delta(0, n + 1), A.diff[n]) == run(d[n], {{A.delta(0, n)}, {I(d[0]), A.diff[n]}}), deg(n));
        rep.record("right_covariant",
                   compose(A.delta(n + 1, 0), A.diff[n]) == run(d[n], {{A.delta(n, 0)}, {A.diff[n], I(d[0])}}), deg(n));
      }
    }
  }
  if (level == CalculusLevel::fodc) {
    GradedBialgebra low = GradedBialgebra::with_dims({d[0], d[1]});
    low.mult[0][0] = A.m(0, 0);
    low.mult[0][1] = A.m(0, 1);
    low.mult[1][0] = A.m(1, 0);
    low.unit = A.unit;
    low.diff = {A.diff[0]};
    record_generation(rep, low);
  } else {
    record_generation(rep, A);
  }
  return rep;
}

Matrix universal_inclusion(const HopfAlgebraData& H) { return kernel_basis(H.mult); }

FirstOrderCalculus universal_fodc(const HopfAlgebraData& H) {
  const std::size_t h = H.dim;
  Matrix incl = universal_inclusion(H);
  HopfBimodule F = free_bimodule(H);
  HopfBimodule X;
  X.name = "Ker m";
  X.dim = incl.cols();
  X.mu_l = solve_left(incl, chain(kron(id(h), incl), {{F.mu_l}}));
  X.mu_r = solve_left(incl, chain(kron(incl, id(h)), {{F.mu_r}}));
  X.nu_l = solve_left(kron(id(h), incl), compose(F.nu_l, incl));
  X.nu_r = solve_left(kron(incl, id(h)), compose(F.nu_r, incl));
  Matrix D = kron(H.unit, id(h)) - kron(id(h), H.unit);
  return {H, std::move(X), solve_left(incl, D)};
}

Matrix universal_morphism(const FirstOrderCalculus& c) {
  const std::size_t h = c.H.dim;
  return chain(universal_inclusion(c.H), {{I(h), c.d}, {c.X.mu_l}});
}

Matrix maurer_cartan_form(const FirstOrderCalculus& c) {
  return run(c.H.dim, {{c.H.comult}, {c.H.antipode, c.d}, {c.X.mu_l}});
}

KernelCounit kernel_counit_crossed(const HopfAlgebraData& H) {
  const std::size_t h = H.dim;
  CrossedModule C = coadjoint_crossed(H);
  KernelCounit out;
  out.incl = kernel_basis(H.counit);
  out.module.name = "Ker ε";
  out.module.dim = out.incl.cols();
  out.module.act = solve_left(out.incl, chain(kron(out.incl, id(h)), {{C.act}}));
  out.module.coact = solve_left(kron(out.incl, id(h)), compose(C.coact, out.incl));
  return out;
}

Matrix crossed_submodule_closure(const HopfAlgebraData& H, const CrossedModule& M, const Matrix& gens) {
  const std::size_t h = H.dim, m = M.dim;
  if (gens.rows() != m) throw ShapeError("crossed_submodule_closure: generators live in M");
  Matrix V = span_of(gens, m);
  while (true) {
    std::vector<Matrix> parts{V};
    // action V⊗H → M and the comodule slices (id⊗e_j^*)ν(v)
    parts.push_back(chain(kron(V, id(h)), {{M.act}}));
    Matrix co = compose(M.coact, V);
    for (std::size_t j = 0; j < h; ++j) {
      Matrix slice(m, V.cols(), co.conductor());
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < V.cols(); ++c) slice.set(i, c, co(i * h + j, c));
      parts.push_back(slice);
    }
    Matrix W = span_of(hstack(parts), m);
    if (W.cols() == V.cols()) return W;
    V = W;
  }
}

std::vector<Matrix> enumerate_submodules(const HopfAlgebraData& H, const CrossedModule& M,
                                         const Matrix& candidates) {
  const std::size_t k = candidates.cols();
  if (k > 16) throw InvalidInput("enumerate_submodules: at most 16 candidate vectors");
  std::vector<Matrix> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1) pick.push_back(j);
    Matrix S = span_of(candidates.select_cols(pick), M.dim);
    if (crossed_submodule_closure(H, M, S).cols() != S.cols()) continue;
    if (std::none_of(out.begin(), out.end(), [&](const Matrix& T) { return T == S; })) out.push_back(S);
  }
  std::stable_sort(out.begin(), out.end(), [](const Matrix& a, const Matrix& b) { return a.cols() < b.cols(); });
  return out;
}

FirstOrderCalculus fodc_from_submodule(const HopfAlgebraData& H, const Matrix& R) {
  const std::size_t h = H.dim;
  if (R.rows() != h) throw ShapeError("fodc_from_submodule: R must consist of vectors in H");
  if (!compose(H.counit, R).is_zero()) throw NotASubmodule("generators are not in Ker ε");
  KernelCounit K = kernel_counit_crossed(H);
  Matrix r = span_of(coordinates(K.incl, R), K.module.dim);
  Matrix closure = crossed_submodule_closure(H, K.module, r);
  if (closure.cols() != r.cols())
    throw NotASubmodule("span of generators is not a crossed submodule of Ker ε; its closure has dimension " +
                        std::to_string(closure.cols()) + " instead of " + std::to_string(r.cols()));

  FirstOrderCalculus U = universal_fodc(H);
  Matrix N = generated_left(U.X.mu_l, h, compose(maurer_cartan_form(U), R));
  N = span_of(N, U.X.dim);
  Quotient Q = quotient_by(N, U.X.dim);
  const std::size_t x = Q.q.rows();
  // N must be a sub-bimodule
  auto vanishes = [&](const Matrix& f) { return f.is_zero(); };
  if (N.cols() > 0) {
    bool ok = vanishes(chain(kron(N, id(h)), {{U.X.mu_r}, {Q.q}})) &&
              vanishes(chain(kron(id(h), N), {{U.X.mu_l}, {Q.q}})) &&
              vanishes(chain(N, {{U.X.nu_l}, {I(h), Q.q}})) && vanishes(chain(N, {{U.X.nu_r}, {Q.q, I(h)}}));
    if (!ok) throw NotASubmodule("H·ω(R) is not a Hopf sub-bimodule of Ker m");
  }
  FirstOrderCalculus out;
  out.H = H;
  out.X.name = R.cols() == 0 ? "Ker m" : "Ker m/N";
  out.X.dim = x;
  out.X.mu_l = chain(kron(id(h), Q.s), {{U.X.mu_l}, {Q.q}});
  out.X.mu_r = chain(kron(Q.s, id(h)), {{U.X.mu_r}, {Q.q}});
  out.X.nu_l = chain(Q.s, {{U.X.nu_l}, {I(h), Q.q}});
  out.X.nu_r = chain(Q.s, {{U.X.nu_r}, {Q.q, I(h)}});
  out.d = compose(Q.q, U.d);
  return out;
}

Matrix calculus_submodule(const FirstOrderCalculus& c) {
  KernelCounit K = kernel_counit_crossed(c.H);
  Matrix k = kernel_basis(compose(maurer_cartan_form(c), K.incl));
  return span_of(compose(K.incl, k), c.H.dim);
}

CommaExtension comma_extension(const FirstOrderCalculus& c) {
  const HopfAlgebraData& H = c.H;
  const HopfBimodule& X = c.X;
  const std::size_t h = H.dim, x = X.dim, e = h + x;
  CommaExtension out;
  out.in_h = Matrix(e, h);
  for (std::size_t i = 0; i < h; ++i) out.in_h.set(i, i, Scalar(1));
  out.in_x = Matrix(e, x);
  for (std::size_t i = 0; i < x; ++i) out.in_x.set(h + i, i, Scalar(1));
  out.pr_h = out.in_h.transpose();
  out.pr_x = out.in_x.transpose();

  HopfBimodule& E = out.E;
  E.name = "H⊕_d " + X.name;
  E.dim = e;
  const Matrix &ih = out.in_h, &ix = out.in_x, &ph = out.pr_h, &px = out.pr_x;
  E.mu_l = run(h * e, {{I(h), ph}, {H.mult}, {ih}}) + run(h * e, {{I(h), px}, {X.mu_l}, {ix}});
  E.mu_r = run(e * h, {{ph, I(h)}, {H.mult}, {ih}}) + run(e * h, {{ph, I(h)}, {I(h), c.d}, {X.mu_l}, {ix}}) +
           run(e * h, {{px, I(h)}, {X.mu_r}, {ix}});
  E.nu_l = run(e, {{ph}, {H.comult}, {I(h), ih}}) + run(e, {{px}, {X.nu_l}, {I(h), ix}});
  E.nu_r = run(e, {{ph}, {H.comult}, {ih, I(h)}}) + run(e, {{px}, {X.nu_r}, {ix, I(h)}});
  out.x = compose(ih, H.unit);
  return out;
}

std::vector<Matrix> graded_bracket(const GradedBialgebra& A, const Matrix& x) {
  if (A.N < 1 || x.rows() != A.dims[1] || x.cols() != 1) throw ShapeError("graded_bracket: x must lie in degree 1");
  std::vector<Matrix> out;
  for (int n = 0; n < A.N; ++n) {
    const std::size_t dn = A.dims[n];
    Matrix left = chain(kron(x, id(dn)), {{A.m(1, n)}});
    Matrix right = chain(kron(id(dn), x), {{A.m(n, 1)}});
    out.push_back(left - sign(n) * right);
  }
  return out;
}

MaximalCalculus maximal_calculus(const GradedBialgebra& A) {
  if (!A.has_diff()) throw InvalidInput("maximal_calculus: input has no differential");
  const int N = A.N;
  const auto& d = A.dims;
  MaximalCalculus out;
  auto& inc = out.incl;
  inc.push_back(id(d[0]));
  auto keep = [&](Matrix span, std::size_t n) { return span.cols() == n ? id(n) : span; };
  if (N >= 1) inc.push_back(keep(span_of(chain(kron(id(d[0]), A.diff[0]), {{A.m(0, 1)}}), d[1]), d[1]));
  for (int n = 2; n <= N; ++n) {
    const Matrix &i1 = inc[1], &ip = inc[n - 1];
    Matrix gen = i1.cols() * ip.cols() == 0 ? Matrix(d[n], 0)
                                            : run(i1.cols() * ip.cols(), {{i1, ip}, {A.m(1, n - 1)}});
    inc.push_back(keep(span_of(gen, d[n]), d[n]));
  }

  GradedSpace sd;
  for (const auto& i : inc) sd.push_back(i.cols());
  GradedBialgebra& S = out.sub;
  S = GradedBialgebra::with_dims(sd);
  S.lambda = A.lambda;
  std::vector<Matrix> back;  // left inverses
  for (const auto& i : inc) back.push_back(i.cols() == 0 ? Matrix(0, i.rows()) : left_inverse(i));
  for (int k = 0; k <= N; ++k)
    for (int l = 0; k + l <= N; ++l) {
      const std::size_t a = sd[k] * sd[l];
      Matrix img = a == 0 ? Matrix(d[k + l], 0) : run(a, {{inc[k], inc[l]}, {A.m(k, l)}});
      S.mult[k][l] = sd[k + l] == 0 ? Matrix(0, a) : solve_left(inc[k + l], img);
      Matrix co = compose(A.delta(k, l), inc[k + l]);
      Matrix r = chain(co, {{back[k], back[l]}});
      if (chain(r, {{inc[k], inc[l]}}) != co)
        throw FactorizationError("maximal_calculus: sub-object is not a subcoalgebra");
      S.comult[k][l] = r;
    }
  S.unit = compose(back[0], A.unit);
  S.counit = compose(A.counit, inc[0]);
  for (int n = 0; n < N; ++n)
    S.diff.push_back(sd[n + 1] == 0 ? Matrix(0, sd[n]) : restrict_endo(A.diff[n], inc[n], inc[n + 1]));
  if (A.has_antipode())
    for (int n = 0; n <= N; ++n)
      S.antipode.push_back(sd[n] == 0 ? Matrix(0, 0) : restrict_endo(A.antipode[n], inc[n], inc[n]));
  return out;
}

std::vector<Matrix> extend_from_degree_zero(const GradedBialgebra& src, const GradedBialgebra& dst,
                                            const Matrix& f0) {
  if (src.N != dst.N) throw ShapeError("extend_from_degree_zero: truncations differ");
  std::vector<Matrix> f{f0};
  const std::size_t h = src.dims[0];
  for (int n = 1; n <= src.N; ++n) {
    if (src.dims[n] == 0) {
      f.push_back(Matrix(dst.dims[n], 0));
      continue;
    }
    Matrix epi = chain(kron(id(h), src.diff[n - 1]), {{src.m(0, n)}});
    Matrix target = run(h * src.dims[n - 1], {{f0, compose(dst.diff[n - 1], f[n - 1])}, {dst.m(0, n)}});
    f.push_back(solve_right(epi, target));
  }
  return f;
}

ExteriorCalculus exterior_calculus(const FirstOrderCalculus& c, int N) {
  if (N < 1) throw InvalidInput("exterior_calculus: N must be at least 1");
  ExteriorCalculus out;
  out.wedge = wedge_over_H(c.H, c.X, N);
  GradedBialgebra& B = out.forms;
  B = out.wedge.B;
  const auto& d = B.dims;
  const std::size_t h = c.H.dim;
  B.diff = {c.d};
  for (int n = 1; n < N; ++n) {
    if (d[n] == 0 || d[n + 1] == 0) {
      B.diff.push_back(Matrix(d[n + 1], d[n]));
      continue;
    }
    // d_n(a·dω) = da·dω
    Matrix epi = chain(kron(id(h), B.diff[n - 1]), {{B.m(0, n)}});
    Matrix target = run(h * d[n - 1], {{c.d, B.diff[n - 1]}, {B.m(1, n)}});
    B.diff.push_back(solve_right(epi, target));
  }
  return out;
}

ExteriorViaComma exterior_calculus_maximal(const FirstOrderCalculus& c, int N) {
  if (N < 1) throw InvalidInput("exterior_calculus_maximal: N must be at least 1");
  ExteriorViaComma out;
  out.comma = comma_extension(c);
  out.wedge = wedge_over_H(c.H, out.comma.E, N);
  out.ambient = out.wedge.B;
  out.ambient.diff = graded_bracket(out.ambient, out.comma.x);
  out.maximal = maximal_calculus(out.ambient);
  return out;
}

}  // namespace braidcalc
