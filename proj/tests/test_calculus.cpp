#include <gtest/gtest.h>

#include <random>

#include "braidcalc/calculus.hpp"
#include "braidcalc/corpus.hpp"
#include "braidcalc/errors.hpp"
#include "braidcalc/linalg.hpp"
#include "braidcalc/tensor.hpp"

using namespace braidcalc;

namespace {

Matrix idm(std::size_t n) { return Matrix::identity(n); }

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> dist(-2, 2);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(dist(rng)));
  return m;
}

// Stable under the action and a subcomodule.
bool is_crossed_sub(const HopfAlgebraData& H, const CrossedModule& M, const Matrix& V) {
  if (V.cols() == 0) return true;
  Matrix acted = chain(kron(V, idm(H.dim)), {{M.act}});
  return span_contains(V, acted) && span_contains(kron(V, idm(H.dim)), compose(M.coact, V));
}

// e_χ = Σ χ(g^i)^{-1} g^i for the character χ(g) = ζ_n^a.
Matrix character_idempotent(int n, int a) {
  Matrix v(n, 1);
  for (int i = 0; i < n; ++i) v.set(i, 0, Scalar::zeta(n, (n - (a * i) % n) % n));
  return v;
}

void expect_restricts(const ExteriorCalculus& e, const FirstOrderCalculus& c, const std::string& at) {
  const GradedBialgebra& B = e.forms;
  ASSERT_EQ(B.dims[0], c.H.dim) << at;
  ASSERT_EQ(B.dims[1], c.X.dim) << at;
  EXPECT_EQ(B.m(0, 0), c.H.mult) << at;
  EXPECT_EQ(B.m(0, 1), c.X.mu_l) << at;
  EXPECT_EQ(B.m(1, 0), c.X.mu_r) << at;
  EXPECT_EQ(B.delta(0, 0), c.H.comult) << at;
  EXPECT_EQ(B.delta(0, 1), c.X.nu_l) << at;
  EXPECT_EQ(B.delta(1, 0), c.X.nu_r) << at;
  EXPECT_EQ(B.diff[0], c.d) << at;
}

}  // namespace

TEST(Calculus, UniversalCalculusOnCorpus) {
  for (const auto& H : corpus::hopf_algebras()) {
    FirstOrderCalculus U = universal_fodc(H);
    EXPECT_EQ(U.X.dim, H.dim * H.dim - H.dim) << H.name;
    EXPECT_TRUE(compose(U.d, H.unit).is_zero()) << H.name;
    Report b = check_bimodule(H, U.X);
    EXPECT_TRUE(b.all_pass()) << H.name << "\n" << b.summary();
    Report r = verify_calculus(U, CalculusLevel::bicovariant);
    EXPECT_TRUE(r.all_pass()) << H.name << "\n" << r.summary();
    // D(a) = 1⊗a − a⊗1 in H⊗H
    Matrix D = kron(H.unit, idm(H.dim)) - kron(idm(H.dim), H.unit);
    EXPECT_EQ(compose(universal_inclusion(H), U.d), D) << H.name;
  }
}

TEST(Calculus, FirstOrderBicovariantIsDifferentialHopf) {
  for (const char* name : {"kZ2", "kZ3", "sweedler"}) {
    FirstOrderCalculus U = universal_fodc(corpus::hopf_algebra(name));
    Report r = verify_calculus(U, CalculusLevel::diff_hopf);
    EXPECT_TRUE(r.all_pass()) << name << "\n" << r.summary();
  }
}

TEST(Calculus, UniversalIsInitial) {
  for (const char* name : {"kZ3", "sweedler"}) {
    HopfAlgebraData H = corpus::hopf_algebra(name);
    FirstOrderCalculus U = universal_fodc(H);
    KernelCounit K = kernel_counit_crossed(H);
    std::vector<FirstOrderCalculus> targets{U};
    for (std::size_t j = 0; j < K.module.dim; ++j) {
      Matrix R = compose(K.incl, crossed_submodule_closure(H, K.module, Matrix::unit_column(K.module.dim, j)));
      targets.push_back(fodc_from_submodule(H, R));
    }
    for (const auto& c : targets) {
      std::string at = H.name + " → dim " + std::to_string(c.X.dim);
      Matrix pi = universal_morphism(c);
      EXPECT_EQ(compose(pi, U.d), c.d) << at;
      Report m = check_bimodule_morphism(H, pi, U.X, c.X);
      EXPECT_TRUE(m.all_pass()) << at << "\n" << m.summary();
      // any left-module map f with f∘D = d is π: solve on the epi μ_l(id⊗D)
      Matrix epi = chain(kron(idm(H.dim), U.d), {{U.X.mu_l}});
      Matrix target = chain(kron(idm(H.dim), c.d), {{c.X.mu_l}});
      EXPECT_EQ(solve_right(epi, target), pi) << at;
    }
  }
}

TEST(Calculus, KernelCounitMatchesUniversalCoinvariants) {
  for (const auto& H : corpus::hopf_algebras()) {
    KernelCounit K = kernel_counit_crossed(H);
    EXPECT_EQ(K.module.dim, H.dim - 1) << H.name;
    Report c = check_crossed(H, K.module);
    EXPECT_TRUE(c.all_pass()) << H.name << "\n" << c.summary();

    FirstOrderCalculus U = universal_fodc(H);
    Coinvariants C = coinvariants(H, U.X);
    ASSERT_EQ(C.module.dim, K.module.dim) << H.name;
    // x ↦ S(x_1)⊗x_2 lands in the coinvariants
    Matrix phi = compose({C.proj, maurer_cartan_form(U), K.incl});
    EXPECT_EQ(compose(C.incl, phi), compose(maurer_cartan_form(U), K.incl)) << H.name;
    EXPECT_EQ(rank(phi), K.module.dim) << H.name;
    Report m = check_crossed_morphism(H, phi, K.module, C.module);
    EXPECT_TRUE(m.all_pass()) << H.name << "\n" << m.summary();
  }
}

TEST(Calculus, ClosureExamples) {
  HopfAlgebraData H = corpus::hopf_algebra("kZ2");
  KernelCounit K = kernel_counit_crossed(H);
  EXPECT_EQ(crossed_submodule_closure(H, K.module, Matrix(1, 0)).cols(), 0u);
  EXPECT_EQ(crossed_submodule_closure(H, K.module, idm(1)).cols(), 1u);
  // g − 1 spans Ker ε over kZ2; acting by g gives −(g − 1)
  Matrix gm1 = Matrix::column({Scalar(-1), Scalar(1)});
  Matrix cl = crossed_submodule_closure(H, K.module, coordinates(K.incl, gm1));
  EXPECT_EQ(cl.cols(), 1u);
  EXPECT_TRUE(is_crossed_sub(H, K.module, cl));
}

TEST(Calculus, ClosureProperties) {
  std::mt19937 rng(7);
  for (const auto& H : corpus::hopf_algebras()) {
    std::vector<CrossedModule> mods{kernel_counit_crossed(H).module};
    for (const auto& M : corpus::crossed_modules(H))
      if (M.dim <= 9) mods.push_back(M);
    for (const auto& M : mods)
      for (int trial = 0; trial < 3; ++trial) {
        std::string at = H.name + " " + M.name;
        Matrix g = random_matrix(rng, M.dim, trial == 0 ? 0 : 1);
        Matrix cl = crossed_submodule_closure(H, M, g);
        EXPECT_TRUE(is_crossed_sub(H, M, cl)) << at;
        if (g.cols() > 0) EXPECT_TRUE(span_contains(cl, g)) << at;
        EXPECT_EQ(crossed_submodule_closure(H, M, cl), cl) << at;
        // minimal: contained in the closure of anything containing g
        Matrix bigger = crossed_submodule_closure(H, M, hstack({g, random_matrix(rng, M.dim, 1)}));
        EXPECT_TRUE(cl.cols() == 0 || span_contains(bigger, cl)) << at;
      }
  }
}

TEST(Calculus, ClassificationRoundTripKZ3) {
  HopfAlgebraData H = corpus::hopf_algebra("kZ3");
  KernelCounit K = kernel_counit_crossed(H);
  Matrix e1 = character_idempotent(3, 1), e2 = character_idempotent(3, 2);
  EXPECT_TRUE(compose(H.counit, hstack({e1, e2})).is_zero());

  // R = 0 is the universal calculus on the nose
  FirstOrderCalculus U = universal_fodc(H);
  FirstOrderCalculus c0 = fodc_from_submodule(H, Matrix(3, 0));
  EXPECT_EQ(c0.X.mu_l, U.X.mu_l);
  EXPECT_EQ(c0.X.mu_r, U.X.mu_r);
  EXPECT_EQ(c0.X.nu_l, U.X.nu_l);
  EXPECT_EQ(c0.X.nu_r, U.X.nu_r);
  EXPECT_EQ(c0.d, U.d);
  EXPECT_EQ(calculus_submodule(c0).cols(), 0u);

  for (const Matrix& R : {e1, e2}) {
    FirstOrderCalculus c = fodc_from_submodule(H, R);
    EXPECT_EQ(c.X.dim, 3u);
    Report r = verify_calculus(c, CalculusLevel::bicovariant);
    EXPECT_TRUE(r.all_pass()) << r.summary();
    EXPECT_TRUE(check_bimodule(H, c.X).all_pass());
    EXPECT_EQ(calculus_submodule(c), image_basis(R));
  }

  FirstOrderCalculus z = fodc_from_submodule(H, K.incl);
  EXPECT_EQ(z.X.dim, 0u);
  EXPECT_TRUE(verify_calculus(z, CalculusLevel::bicovariant).all_pass());
  EXPECT_EQ(calculus_submodule(z), image_basis(K.incl));

  // enumeration over the idempotent basis finds 0, the two lines and Ker ε
  auto subs = enumerate_submodules(H, K.module, coordinates(K.incl, hstack({e1, e2})));
  EXPECT_EQ(subs.size(), 4u);

  // g − 1 alone is not stable: its closure is all of Ker ε
  Matrix gm1 = Matrix::column({Scalar(-1), Scalar(1), Scalar(0)});
  EXPECT_THROW(fodc_from_submodule(H, gm1), NotASubmodule);
  EXPECT_THROW(fodc_from_submodule(H, H.unit), NotASubmodule);
}

TEST(Calculus, ClassificationRoundTripSweedler) {
  HopfAlgebraData H = corpus::hopf_algebra("sweedler");
  KernelCounit K = kernel_counit_crossed(H);
  auto subs = enumerate_submodules(H, K.module, idm(K.module.dim));
  ASSERT_GE(subs.size(), 2u);
  std::vector<Matrix> Rs;
  for (const auto& s : subs) Rs.push_back(compose(K.incl, s));
  for (std::size_t j = 0; j < K.module.dim; ++j)
    Rs.push_back(compose(K.incl, crossed_submodule_closure(H, K.module, Matrix::unit_column(K.module.dim, j))));
  std::size_t proper = 0;
  for (const auto& R : Rs) {
    std::string at = "dim R = " + std::to_string(R.cols());
    FirstOrderCalculus c = fodc_from_submodule(H, R);
    EXPECT_EQ(c.X.dim, H.dim * (K.module.dim - R.cols())) << at;
    EXPECT_TRUE(verify_calculus(c, CalculusLevel::bicovariant).all_pass()) << at;
    EXPECT_TRUE(check_bimodule(H, c.X).all_pass()) << at;
    EXPECT_TRUE(same_span(calculus_submodule(c), R) || R.cols() == 0) << at;
    EXPECT_EQ(calculus_submodule(c).cols(), R.cols()) << at;
    if (R.cols() > 0 && R.cols() < K.module.dim) ++proper;
  }
  EXPECT_GT(proper, 0u);
}

TEST(Calculus, CommaExtension) {
  for (const char* name : {"kZ2", "kZ3", "sweedler"}) {
    HopfAlgebraData H = corpus::hopf_algebra(name);
    KernelCounit K = kernel_counit_crossed(H);
    std::vector<FirstOrderCalculus> calcs{universal_fodc(H), fodc_from_submodule(H, K.incl)};
    for (const auto& c : calcs) {
      std::string at = std::string(name) + " dim X " + std::to_string(c.X.dim);
      CommaExtension ce = comma_extension(c);
      Report b = check_bimodule(H, ce.E);
      EXPECT_TRUE(b.all_pass()) << at << "\n" << b.summary();
      EXPECT_EQ(compose(ce.E.nu_l, ce.x), kron(H.unit, ce.x)) << at;
      EXPECT_EQ(compose(ce.E.nu_r, ce.x), kron(ce.x, H.unit)) << at;
      // [x,·]_0 = x·a − a·x = (0, da)
      Matrix br = chain(kron(ce.x, idm(H.dim)), {{ce.E.mu_r}}) - chain(kron(idm(H.dim), ce.x), {{ce.E.mu_l}});
      EXPECT_EQ(br, compose(ce.in_x, c.d)) << at;
      EXPECT_TRUE(compose(br, H.unit).is_zero()) << at;
      EXPECT_TRUE(compose(ce.pr_h, ce.in_x).is_zero()) << at;
    }
  }
}

TEST(Calculus, ExteriorCalculusBiproductRoute) {
  const int N = 3;
  std::vector<FirstOrderCalculus> calcs;
  for (const char* name : {"kZ2", "kZ3", "sweedler"}) calcs.push_back(universal_fodc(corpus::hopf_algebra(name)));
  calcs.push_back(fodc_from_submodule(corpus::hopf_algebra("kZ3"), character_idempotent(3, 1)));
  for (const auto& c : calcs) {
    std::string at = c.H.name + " dim X " + std::to_string(c.X.dim);
    ExteriorCalculus e = exterior_calculus(c, N);
    Report r = verify_calculus(e.forms, CalculusLevel::diff_hopf);
    EXPECT_TRUE(r.all_pass()) << at << "\n" << r.summary();
    Report b = verify_calculus(e.forms, CalculusLevel::bicovariant);
    EXPECT_TRUE(b.all_pass()) << at << "\n" << b.summary();
    expect_restricts(e, c, at);
  }
}

TEST(Calculus, ZeroCalculusIsConcentratedInDegreeZero) {
  for (const char* name : {"kZ2", "sweedler"}) {
    HopfAlgebraData H = corpus::hopf_algebra(name);
    FirstOrderCalculus z = fodc_from_submodule(H, kernel_counit_crossed(H).incl);
    ExteriorCalculus e = exterior_calculus(z, 3);
    EXPECT_EQ(e.forms.dims, (GradedSpace{H.dim, 0, 0, 0})) << name;
    EXPECT_TRUE(verify_calculus(e.forms, CalculusLevel::diff_hopf).all_pass()) << name;
  }
}

TEST(Calculus, RoutesAgree) {
  const int N = 3;
  std::vector<FirstOrderCalculus> calcs;
  for (const char* name : {"kZ2", "kZ3", "sweedler"}) calcs.push_back(universal_fodc(corpus::hopf_algebra(name)));
  calcs.push_back(fodc_from_submodule(corpus::hopf_algebra("kZ3"), character_idempotent(3, 2)));
  for (const auto& c : calcs) {
    std::string at = c.H.name + " dim X " + std::to_string(c.X.dim);
    ExteriorCalculus e = exterior_calculus(c, N);
    ExteriorViaComma m = exterior_calculus_maximal(c, N);

    Report amb = verify_calculus(m.ambient, CalculusLevel::diff_algebra);
    EXPECT_TRUE(amb.passed("d_squared") && amb.passed("leibniz")) << at << "\n" << amb.summary();
    EXPECT_EQ(m.ambient.dims[1], c.H.dim + c.X.dim) << at;

    const GradedBialgebra& S = m.maximal.sub;
    EXPECT_EQ(S.dims, e.forms.dims) << at;
    EXPECT_EQ(S.dims[1], c.X.dim) << at;
    Report sr = verify_calculus(S, CalculusLevel::diff_hopf);
    EXPECT_TRUE(sr.all_pass()) << at << "\n" << sr.summary();
    Report inc = check_graded_morphism(m.maximal.incl, S, m.ambient);
    EXPECT_TRUE(inc.all_pass()) << at << "\n" << inc.summary();

    std::vector<Matrix> f = extend_from_degree_zero(e.forms, S, idm(c.H.dim));
    Report fm = check_graded_morphism(f, e.forms, S);
    EXPECT_TRUE(fm.all_pass()) << at << "\n" << fm.summary();
    for (int n = 0; n <= N; ++n) EXPECT_EQ(rank(f[n]), S.dims[n]) << at << " degree " << n;
    // degree one lands on (0, X)
    EXPECT_EQ(compose(m.maximal.incl[1], f[1]), m.comma.in_x) << at;

    // a second section of each epi gives the same morphism
    std::mt19937 rng(11);
    for (int n = 1; n <= N; ++n) {
      if (e.forms.dims[n] == 0) continue;
      const std::size_t h = c.H.dim;
      Matrix epi = chain(kron(idm(h), e.forms.diff[n - 1]), {{e.forms.m(0, n)}});
      Matrix s = right_inverse(epi);
      Matrix K = kernel_basis(epi);
      if (K.cols() > 0) s = s + compose(K, random_matrix(rng, K.cols(), s.cols()));
      ASSERT_TRUE(compose(epi, s).is_identity());
      Matrix target = chain(kron(idm(h), compose(S.diff[n - 1], f[n - 1])), {{S.m(0, n)}});
      EXPECT_EQ(compose(target, s), f[n]) << at << " degree " << n;
    }
  }
}

TEST(Calculus, MaximalCalculusProperties) {
  FirstOrderCalculus c = universal_fodc(corpus::hopf_algebra("kZ3"));
  ExteriorCalculus e = exterior_calculus(c, 3);
  // already a calculus: identity inclusion
  MaximalCalculus same = maximal_calculus(e.forms);
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(same.incl[n].is_identity()) << n;

  ExteriorViaComma m = exterior_calculus_maximal(c, 3);
  MaximalCalculus twice = maximal_calculus(m.maximal.sub);
  EXPECT_EQ(twice.sub.dims, m.maximal.sub.dims);
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(twice.incl[n].is_identity()) << n;

  GradedBialgebra flat = e.forms;
  for (auto& dn : flat.diff) dn = Matrix(dn.rows(), dn.cols());
  MaximalCalculus zero = maximal_calculus(flat);
  EXPECT_EQ(zero.sub.dims, (GradedSpace{3, 0, 0, 0}));
}

TEST(Calculus, VerifyLevels) {
  FirstOrderCalculus U = universal_fodc(corpus::hopf_algebra("sweedler"));
  EXPECT_TRUE(verify_calculus(U, CalculusLevel::fodc).all_pass());
  FirstOrderCalculus bad = U;
  bad.d = Matrix(U.d.rows(), U.d.cols());
  Report r = verify_calculus(bad, CalculusLevel::fodc);
  EXPECT_FALSE(r.passed("surjective"));
  EXPECT_TRUE(r.passed("leibniz"));
  Report g = verify_calculus(as_graded(bad), CalculusLevel::diff_algebra);
  EXPECT_FALSE(g.passed("gen_left"));
  EXPECT_FALSE(g.passed("gen_products"));
  EXPECT_TRUE(g.passed("gen_agree"));

  // left covariance fails once d is twisted by a non-comodule map
  FirstOrderCalculus twisted = U;
  twisted.d = compose(U.X.mu_l, kron(Matrix::column({Scalar(0), Scalar(0), Scalar(1), Scalar(0)}), U.d));
  Report t = verify_calculus(twisted, CalculusLevel::bicovariant);
  EXPECT_FALSE(t.all_pass());
}
