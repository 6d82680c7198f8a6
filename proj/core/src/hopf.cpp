#include "braidcalc/hopf.hpp"

#include "braidcalc/errors.hpp"
#include "braidcalc/linalg.hpp"
#include "braidcalc/tensor.hpp"

namespace braidcalc {

namespace {

Matrix run(std::size_t n, const std::vector<Layer>& layers) {
  Matrix out = chain(layers);
  if (out.cols() != n) throw ShapeError("layer source does not match");
  return out;
}

Matrix column_of(const std::vector<Scalar>& v) { return Matrix::column(v); }

}  // namespace

int HopfAlgebraData::conductor() const {
  int c = mult.conductor();
  for (const Matrix* m : {&unit, &comult, &counit, &antipode, &antipode_inv}) c = lcm_conductor(c, m->conductor());
  return c;
}

void record_equal(Report& r, const std::string& name, const Matrix& a, const Matrix& b, const std::string& where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    r.record(name, false, where + (where.empty() ? "" : ": ") + "shape mismatch");
    return;
  }
  auto [row, col] = first_difference(a, b);
  if (row < 0) {
    r.record(name, true);
    return;
  }
  r.record(name, false,
           where + (where.empty() ? "" : ": ") + "entry (" + std::to_string(row) + "," + std::to_string(col) + ")");
}

Report check_hopf(const HopfAlgebraData& H) {
  Report r;
  const std::size_t n = H.dim;
  auto shape = [&](const Matrix& m, std::size_t rows, std::size_t cols) { return m.rows() == rows && m.cols() == cols; };
  bool shapes = shape(H.mult, n, n * n) && shape(H.unit, n, 1) && shape(H.comult, n * n, n) && shape(H.counit, 1, n) &&
                shape(H.antipode, n, n) && shape(H.antipode_inv, n, n);
  r.record("shapes", shapes);
  if (!shapes) return r;
  Matrix id = Matrix::identity(n);
  auto cmp = [&](const char* name, const Matrix& a, const Matrix& b) { record_equal(r, name, a, b); };
  cmp("assoc", run(n * n * n, {{H.mult, I(n)}, {H.mult}}), run(n * n * n, {{I(n), H.mult}, {H.mult}}));
  cmp("unit", chain(kron(H.unit, id), {{H.mult}}), id);
  cmp("unit", chain(kron(id, H.unit), {{H.mult}}), id);
  cmp("coassoc", run(n, {{H.comult}, {H.comult, I(n)}}), run(n, {{H.comult}, {I(n), H.comult}}));
  cmp("counit", run(n, {{H.comult}, {H.counit, I(n)}}), id);
  cmp("counit", run(n, {{H.comult}, {I(n), H.counit}}), id);
  cmp("bialgebra", compose(H.comult, H.mult),
      run(n * n, {{H.comult, H.comult}, {I(n), swap_matrix(n, n), I(n)}, {H.mult, H.mult}}));
  cmp("bialgebra_unit", compose(H.comult, H.unit), kron(H.unit, H.unit));
  cmp("bialgebra_unit", compose(H.counit, H.mult), kron(H.counit, H.counit));
  cmp("bialgebra_unit", compose(H.counit, H.unit), Matrix::identity(1));
  Matrix ee = compose(H.unit, H.counit);
  cmp("antipode", run(n, {{H.comult}, {H.antipode, I(n)}, {H.mult}}), ee);
  cmp("antipode", run(n, {{H.comult}, {I(n), H.antipode}, {H.mult}}), ee);
  cmp("antipode_invertible", compose(H.antipode, H.antipode_inv), id);
  cmp("antipode_invertible", compose(H.antipode_inv, H.antipode), id);
  return r;
}

Matrix tensor_square_product(const HopfAlgebraData& H, const Matrix& u, const Matrix& v) {
  const std::size_t n = H.dim;
  Matrix out(n * n, 1);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (u(i, 0).is_zero()) continue;
    for (std::size_t j = 0; j < n * n; ++j) {
      if (v(j, 0).is_zero()) continue;
      Matrix left = H.mult.col((i / n) * n + j / n), right = H.mult.col((i % n) * n + j % n);
      out = out + (u(i, 0) * v(j, 0)) * kron(left, right);
    }
  }
  return out;
}

HopfAlgebraData hopf_from_rule(const BasisHopfRule& rule) {
  const std::size_t n = rule.dim;
  HopfAlgebraData H;
  H.name = rule.name;
  H.dim = n;
  H.mult = Matrix(n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) H.mult.set_block(0, a * n + b, column_of(rule.mult(a, b)));
  H.unit = column_of(rule.unit);
  H.comult = Matrix(n * n, n);
  H.counit = Matrix(1, n);
  H.antipode = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    H.comult.set_block(0, a, column_of(rule.comult(a)));
    H.counit.set(0, a, rule.counit(a));
    H.antipode.set_block(0, a, column_of(rule.antipode(a)));
  }
  H.antipode_inv = inverse(H.antipode);
  return H;
}

HopfAlgebraData group_algebra(const std::string& name, const std::vector<std::vector<int>>& table) {
  const std::size_t n = table.size();
  std::vector<int> inv(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == 0) inv[a] = static_cast<int>(b);
  auto e = [n](std::size_t i) {
    std::vector<Scalar> v(n);
    v[i] = Scalar(1);
    return v;
  };
  BasisHopfRule r;
  r.name = name;
  r.dim = n;
  r.mult = [&table, e](std::size_t a, std::size_t b) { return e(table[a][b]); };
  r.unit = e(0);
  r.comult = [n](std::size_t a) {
    std::vector<Scalar> v(n * n);
    v[a * n + a] = Scalar(1);
    return v;
  };
  r.counit = [](std::size_t) { return Scalar(1); };
  r.antipode = [&inv, e](std::size_t a) { return e(inv[a]); };
  return hopf_from_rule(r);
}

HopfAlgebraData cyclic_group_algebra(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return group_algebra("kZ" + std::to_string(n), t);
}

HopfAlgebraData s3_group_algebra() {
  // elements as permutations of {0,1,2}, identity first
  std::vector<std::vector<int>> el = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  auto index = [&](const std::vector<int>& p) {
    for (std::size_t i = 0; i < el.size(); ++i)
      if (el[i] == p) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> p(3);
      for (int i = 0; i < 3; ++i) p[i] = el[a][el[b][i]];
      t[a][b] = index(p);
    }
  return group_algebra("kS3", t);
}

HopfAlgebraData taft_algebra(int n) {
  const std::size_t dim = static_cast<std::size_t>(n) * n;
  Scalar z = Scalar::zeta(n);
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(((i % n) + n) % n * n + j); };
  // (g^a x^b)(g^c x^d) = ζ^{bc} g^{a+c} x^{b+d}
  auto mul = [=](std::size_t u, std::size_t v) {
    int a = static_cast<int>(u) / n, b = static_cast<int>(u) % n, c = static_cast<int>(v) / n, d = static_cast<int>(v) % n;
    std::vector<Scalar> out(dim);
    if (b + d < n) out[idx(a + c, b + d)] = z.pow(static_cast<long long>(b) * c);
    return out;
  };
  BasisHopfRule pre;
  pre.dim = dim;
  pre.mult = mul;
  pre.unit = std::vector<Scalar>(dim);
  pre.unit[0] = Scalar(1);
  pre.comult = [dim](std::size_t) { return std::vector<Scalar>(dim * dim); };
  pre.counit = [](std::size_t) { return Scalar(0); };
  pre.antipode = [dim](std::size_t i) {
    std::vector<Scalar> v(dim);
    v[i] = Scalar(1);
    return v;
  };
  // multiplication of H alone, used to expand Δ and S on the basis
  HopfAlgebraData alg = hopf_from_rule(pre);
  auto times = [&](const Matrix& u, const Matrix& v) { return compose(alg.mult, kron(u, v)); };
  auto times2 = [&](const Matrix& u, const Matrix& v) { return tensor_square_product(alg, u, v); };
  Matrix one = Matrix::unit_column(dim, idx(0, 0)), g = Matrix::unit_column(dim, idx(1, 0)),
         x = Matrix::unit_column(dim, idx(0, 1)), ginv = Matrix::unit_column(dim, idx(-1, 0));
  Matrix dg = kron(g, g), dx = kron(x, one) + kron(g, x);
  Matrix sg = ginv, sx = -times(ginv, x);
  std::vector<Matrix> delta(dim), anti(dim);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Matrix D = kron(one, one), S = one;
      for (int t = 0; t < a; ++t) D = times2(D, dg);
      for (int t = 0; t < b; ++t) D = times2(D, dx);
      // S(g^a x^b) = S(x)^b S(g)^a
      for (int t = 0; t < b; ++t) S = times(S, sx);
      for (int t = 0; t < a; ++t) S = times(S, sg);
      delta[idx(a, b)] = D;
      anti[idx(a, b)] = S;
    }
  auto vec = [](const Matrix& m) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, 0));
    return v;
  };
  BasisHopfRule r = pre;
  r.name = n == 2 ? "sweedler" : "taft" + std::to_string(n);
  r.comult = [&](std::size_t i) { return vec(delta[i]); };
  r.counit = [n](std::size_t i) { return (i % n == 0) ? Scalar(1) : Scalar(0); };
  r.antipode = [&](std::size_t i) { return vec(anti[i]); };
  return hopf_from_rule(r);
}

HopfAlgebraData sweedler_algebra() { return taft_algebra(2); }

HopfAlgebraData ground_field() { return cyclic_group_algebra(1); }

}  // namespace braidcalc
