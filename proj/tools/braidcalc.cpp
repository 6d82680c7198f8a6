// braidcalc: batch front-end over the library.
// Exit codes: 0 all checks pass, 1 an axiom fails or NotASubmodule,
// 2 input does not parse, 3 resource bound (TooLarge). Except for exit 2,
// --out always receives a report; failures before any check ran carry "error".
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "braidcalc/calculus.hpp"
#include "braidcalc/corpus.hpp"
#include "braidcalc/errors.hpp"
#include "braidcalc/linalg.hpp"
#include "braidcalc/serialize.hpp"
#include "braidcalc/tensor_hopf.hpp"

namespace fs = std::filesystem;
using namespace braidcalc;

namespace {

enum Exit { kOk = 0, kFail = 1, kParse = 2, kTooLarge = 3 };

json new_report(const std::string& command, const std::string& input) {
  json r;
  r["schema"] = kReportSchema;
  r["command"] = command;
  r["input"] = input;
  r["dims"] = json::array();
  r["checks"] = json::object();
  r["d_blocks"] = json::array();
  return r;
}

void add_checks(json& r, const Report& rep, const std::string& prefix = {}) {
  json checks = to_json(rep);
  for (auto& [k, v] : checks.items()) r["checks"][prefix + k] = v;
}

bool all_pass(const json& r) {
  for (const auto& [k, v] : r["checks"].items())
    if (!v["pass"].get<bool>()) return false;
  return true;
}

void print_checks(const json& r) {
  for (const auto& [k, v] : r["checks"].items()) {
    std::cout << "  " << (v["pass"].get<bool>() ? "pass " : "FAIL ") << k;
    if (!v["pass"].get<bool>()) std::cout << "  (" << v["first_failure"].get<std::string>() << ")";
    std::cout << "\n";
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

int finish(const json& r, const std::string& out, bool quiet_checks = false) {
  if (!out.empty()) write_json_file(out, r);
  if (!quiet_checks) print_checks(r);
  return all_pass(r) ? kOk : kFail;
}

fs::path dir_of(const std::string& file) { return fs::path(file).parent_path(); }

json closure_hint(const HopfAlgebraData& H, const Matrix& gens) {
  json v = json::array();
  if (!compose(H.counit, gens).is_zero()) return v;
  KernelCounit K = kernel_counit_crossed(H);
  Matrix cl = compose(K.incl, crossed_submodule_closure(H, K.module, coordinates(K.incl, gens)));
  for (std::size_t j = 0; j < cl.cols(); ++j) v.push_back(to_json(cl.col(j)));
  return v;
}

// --- check ---------------------------------------------------------------

int cmd_check(const std::string& file, const std::string& kind, const std::string& out) {
  json doc = read_json_file(file);
  json r = new_report("check " + kind, fs::path(file).filename().string());
  if (kind == "hopf") {
    HopfAlgebraData H = hopf_from_json(doc);
    r["dims"].push_back(H.dim);
    add_checks(r, check_hopf(H));
  } else if (kind == "braiding") {
    BraidingData b = braiding_from_json(doc);
    r["dims"].push_back(b.dim);
    YangBaxterResult yb = check_yang_baxter(b.psi);
    Report rep;
    rep.record("invertible", rank(b.psi) == b.psi.rows(), "Ψ is singular");
    rep.record("yang_baxter", yb.ok, "column " + std::to_string(yb.col) + ", row " + std::to_string(yb.row));
    rep.record("lambda_nonzero", !b.lambda.is_zero(), "λ = 0");
    add_checks(r, rep);
    if (!yb.ok) r["witness"] = {{"column", yb.col}, {"row", yb.row}};
  } else if (kind == "bimodule" || kind == "crossed") {
    HopfAlgebraData H = hopf_from_json(resolve_ref(doc.at("hopf"), dir_of(file)));
    add_checks(r, check_hopf(H), "hopf.");
    if (kind == "bimodule") {
      HopfBimodule X = bimodule_from_json(doc);
      r["dims"].push_back(X.dim);
      if (X.dim > 0 && X.mu_l.cols() != H.dim * X.dim) throw ParseError("bimodule and Hopf algebra dimensions differ");
      add_checks(r, check_bimodule(H, X));
    } else {
      CrossedModule M = crossed_from_json(doc);
      r["dims"].push_back(M.dim);
      if (M.dim > 0 && M.act.cols() != H.dim * M.dim) throw ParseError("module and Hopf algebra dimensions differ");
      add_checks(r, check_crossed(H, M));
    }
  } else if (kind == "calculus") {
    CalculusBundle b = bundle_from_json(doc, dir_of(file));
    add_checks(r, check_hopf(b.H), "hopf.");
    FirstOrderCalculus c;
    try {
      c = bundle_calculus(b);
    } catch (const NotASubmodule& e) {
      Report rep;
      rep.record("submodule", false, e.what());
      add_checks(r, rep);
      r["closure"] = closure_hint(b.H, b.generators);
      std::cout << "not a crossed submodule: " << e.what() << "\n";
      return finish(r, out);
    }
    r["dims"] = {c.H.dim, c.X.dim};
    r["d_blocks"].push_back(to_json(c.d));
    add_checks(r, check_bimodule(c.H, c.X), "bimodule.");
    add_checks(r, verify_calculus(c, CalculusLevel::bicovariant), "calculus.");
  } else {
    throw ParseError("unknown kind '" + kind + "'");
  }
  std::cout << "check " << kind << " " << file << ": dims " << join(r["dims"].get<std::vector<std::size_t>>())
            << "\n";
  return finish(r, out);
}

// --- wedge-dims ----------------------------------------------------------

int cmd_wedge_dims(const std::string& file, int N, bool quadratic, const std::string& out) {
  BraidingData b = braiding_from_json(read_json_file(file));
  json r = new_report("wedge-dims", fs::path(file).filename().string());
  if (!check_yang_baxter(b.psi).ok || rank(b.psi) != b.psi.rows()) {
    Report rep;
    rep.record("yang_baxter", false, "input is not an invertible solution of the braid equation");
    add_checks(r, rep);
    return finish(r, out);
  }
  BraidedSpace X(b.dim, b.psi, b.lambda);
  Report rep;
  if (quadratic) {
    QuadraticComparison q = wedge_vs_quadratic(X, N);
    r["dims"] = q.wedge_dims;
    r["quadratic_dims"] = q.quadratic_dims;
    r["first_difference"] = q.first_difference;
    std::cout << "wedge     " << join(q.wedge_dims) << "\n";
    std::cout << "quadratic " << join(q.quadratic_dims) << "\n";
    if (q.equal())
      std::cout << "EQUAL through degree " << N << "\n";
    else
      std::cout << "UNEQUAL from degree " << q.first_difference << "\n";
  } else {
    WedgeAlgebra W = build_wedge(X, N);
    r["dims"] = W.dims();
    std::cout << "wedge " << join(W.dims()) << "\n";
  }
  rep.record("yang_baxter", true);
  add_checks(r, rep);
  return finish(r, out, true);
}

// --- build-calculus ------------------------------------------------------

bool restricts(const GradedBialgebra& B, const FirstOrderCalculus& c) {
  return B.dims[0] == c.H.dim && B.dims[1] == c.X.dim && B.m(0, 0) == c.H.mult && B.m(0, 1) == c.X.mu_l &&
         B.m(1, 0) == c.X.mu_r && B.delta(0, 0) == c.H.comult && B.delta(0, 1) == c.X.nu_l &&
         B.delta(1, 0) == c.X.nu_r && B.diff[0] == c.d;
}

int cmd_build_calculus(const std::string& file, int N, const std::string& route, const std::string& out) {
  CalculusBundle b = bundle_from_json(read_json_file(file), dir_of(file));
  json r = new_report("build-calculus", fs::path(file).filename().string());
  r["route"] = route;
  r["max_degree"] = N;
  FirstOrderCalculus c;
  try {
    c = bundle_calculus(b);
  } catch (const NotASubmodule& e) {
    Report rep;
    rep.record("submodule", false, e.what());
    add_checks(r, rep);
    r["closure"] = closure_hint(b.H, b.generators);
    std::cout << "not a crossed submodule: " << e.what() << "\n";
    return finish(r, out);
  }
  add_checks(r, verify_calculus(c, CalculusLevel::bicovariant), "input.");

  bool bip = route == "biproduct" || route == "both";
  bool max = route == "maximal" || route == "both";
  GradedBialgebra result;
  ExteriorCalculus e;
  if (bip) {
    e = exterior_calculus(c, N);
    add_checks(r, verify_calculus(e.forms, CalculusLevel::diff_hopf), "forms.");
    Report rep;
    rep.record("restricts_to_input", restricts(e.forms, c));
    add_checks(r, rep);
    result = e.forms;
  }
  if (max) {
    ExteriorViaComma m = exterior_calculus_maximal(c, N);
    add_checks(r, verify_calculus(m.maximal.sub, CalculusLevel::diff_hopf), "maximal.");
    Report rep;
    rep.record("maximal_degree_one", m.maximal.sub.dims[1] == c.X.dim, "degree-1 dim differs from dim X");
    add_checks(r, rep);
    if (bip) {
      Report agree;
      agree.record("routes_agree", m.maximal.sub.dims == e.forms.dims, "dims differ");
      if (m.maximal.sub.dims == e.forms.dims) {
        std::vector<Matrix> f = extend_from_degree_zero(e.forms, m.maximal.sub, Matrix::identity(c.H.dim));
        Report fm = check_graded_morphism(f, e.forms, m.maximal.sub);
        agree.record("routes_agree", fm.all_pass(), fm.summary());
        for (int n = 0; n <= N; ++n)
          agree.record("routes_agree", rank(f[n]) == e.forms.dims[n], "not invertible in degree " + std::to_string(n));
      }
      add_checks(r, agree);
    } else {
      result = m.maximal.sub;
    }
  }
  r["dims"] = result.dims;
  for (const auto& d : result.diff) r["d_blocks"].push_back(to_json(d));
  std::cout << "forms " << join(result.dims) << "\n";
  return finish(r, out);
}

// --- classify ------------------------------------------------------------

int cmd_classify(const std::string& file, const std::string& out) {
  CalculusBundle b = bundle_from_json(read_json_file(file), dir_of(file));
  if (b.explicit_calculus) throw ParseError("classify expects a submodule bundle");
  const HopfAlgebraData& H = b.H;
  json r = new_report("classify", fs::path(file).filename().string());
  KernelCounit K = kernel_counit_crossed(H);
  Report rep;
  add_checks(r, check_crossed(H, K.module), "ker_counit.");
  bool in_ker = compose(H.counit, hstack({b.generators, b.candidates})).is_zero();
  rep.record("in_ker_counit", in_ker, "a vector has nonzero counit");
  add_checks(r, rep);
  if (!in_ker) return finish(r, out);

  Matrix gens = coordinates(K.incl, b.generators);
  Matrix span = b.generators.cols() == 0 ? Matrix(K.module.dim, 0) : image_basis(gens);
  Matrix cl = crossed_submodule_closure(H, K.module, gens);
  r["generators_stable"] = cl.cols() == span.cols();
  r["closure"] = json::array();
  for (std::size_t j = 0; j < cl.cols(); ++j) r["closure"].push_back(to_json(compose(K.incl, cl.col(j))));
  std::cout << "Ker ε dim " << K.module.dim << "; closure of generators dim " << cl.cols()
            << (cl.cols() == span.cols() ? " (stable)" : " (not stable)") << "\n";

  Matrix cand = b.candidates.cols() > 0 ? coordinates(K.incl, b.candidates) : Matrix::identity(K.module.dim);
  r["submodules"] = json::array();
  std::cout << "dim R  dim X\n";
  for (const auto& S : enumerate_submodules(H, K.module, cand)) {
    Matrix R = compose(K.incl, S);
    FirstOrderCalculus c = fodc_from_submodule(H, R);
    json s;
    s["dim_R"] = R.cols();
    s["dim_X"] = c.X.dim;
    s["basis"] = json::array();
    for (std::size_t j = 0; j < R.cols(); ++j) s["basis"].push_back(to_json(R.col(j)));
    r["submodules"].push_back(s);
    r["dims"].push_back(c.X.dim);
    std::cout << R.cols() << "      " << c.X.dim << "\n";
  }
  return finish(r, out, true);
}

// --- export-corpus -------------------------------------------------------

std::string slug(std::string s) {
  for (const auto& [from, to] : std::vector<std::pair<std::string, std::string>>{
           {"⋉", "_smash_"}, {"⊗", "_tensor_"}, {"ζ", "zeta"}, {"^", ""}})
    for (std::size_t p; (p = s.find(from)) != std::string::npos;) s.replace(p, from.size(), to);
  std::string o;
  for (unsigned char ch : s) {
    char c = std::isalnum(ch) ? static_cast<char>(ch) : '_';
    if (c == '_' && (o.empty() || o.back() == '_')) continue;
    o += c;
  }
  while (!o.empty() && o.back() == '_') o.pop_back();
  return o;
}

int cmd_export(const std::string& dir) {
  fs::path root(dir);
  for (const char* sub : {"hopf", "braiding", "bimodule", "crossed", "calculus"}) fs::create_directories(root / sub);
  for (const auto& [name, X] : corpus::braidings())
    write_json_file(root / "braiding" / (name + ".json"), braiding_to_json(X.dim(), X.psi(), X.lambda()), -1);
  for (const auto& H : corpus::hopf_algebras()) {
    write_json_file(root / "hopf" / (H.name + ".json"), to_json(H), -1);
    std::string ref = "../hopf/" + H.name + ".json";
    for (const auto& M : corpus::crossed_modules(H)) {
      json j = to_json(M);
      j["hopf"] = ref;
      write_json_file(root / "crossed" / (H.name + "_" + slug(M.name) + ".json"), j, -1);
    }
    for (const auto& X : corpus::hopf_bimodules(H)) {
      if (X.dim > 4 * H.dim) continue;
      json j = to_json(X);
      j["hopf"] = ref;
      write_json_file(root / "bimodule" / (H.name + "_" + slug(X.name) + ".json"), j, -1);
    }
    json u;
    u["hopf"] = ref;
    u["submodule"] = {{"ambient", "ker_counit"}, {"generators", json::array()}};
    write_json_file(root / "calculus" / (H.name + "_universal.json"), u);
  }
  std::cout << "corpus written to " << root.string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidcalc: exact braided Hopf algebra and differential calculus toolkit"};
  app.require_subcommand(1);
  std::string file, out, kind, route = "biproduct", dir;
  int N = 3;
  bool quadratic = false;

  auto* check = app.add_subcommand("check", "verify the axioms of a structure file");
  check->add_option("file", file, "input JSON")->required();
  check->add_option("--kind", kind, "hopf, braiding, bimodule, crossed or calculus")
      ->required()
      ->check(CLI::IsMember({"hopf", "braiding", "bimodule", "crossed", "calculus"}));
  check->add_option("--out", out, "report path");

  auto* wedge = app.add_subcommand("wedge-dims", "dimensions of the antisymmetric tensor algebra");
  wedge->add_option("file", file, "braiding JSON")->required();
  wedge->add_option("--max-degree", N, "truncation degree")->check(CLI::Range(1, 64));
  wedge->add_flag("--compare-quadratic", quadratic, "compare with T/(Ker [2]!)");
  wedge->add_option("--out", out, "report path");

  auto* build = app.add_subcommand("build-calculus", "exterior Hopf algebra of forms over a first order calculus");
  build->add_option("file", file, "calculus bundle JSON")->required();
  build->add_option("--max-degree", N, "truncation degree")->check(CLI::Range(1, 64));
  build->add_option("--route", route, "biproduct, maximal or both")
      ->check(CLI::IsMember({"biproduct", "maximal", "both"}));
  build->add_option("--out", out, "report path");

  auto* classify = app.add_subcommand("classify", "crossed submodules of Ker ε and their calculi");
  classify->add_option("file", file, "calculus bundle JSON with generators and candidates")->required();
  classify->add_option("--out", out, "report path");

  auto* exp = app.add_subcommand("export-corpus", "write the built-in corpus as JSON files");
  exp->add_option("dir", dir, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  // Failures past parsing still leave a report behind when --out is given.
  std::string command = check->parsed() ? "check " + kind : app.get_subcommands().front()->get_name();
  auto error_report = [&](const char* error, const std::string& message) {
    if (out.empty()) return;
    json r = new_report(command, fs::path(file).filename().string());
    r["error"] = {{"kind", error}, {"message", message}};
    write_json_file(out, r);
  };
  try {
    if (*check) return cmd_check(file, kind, out);
    if (*wedge) return cmd_wedge_dims(file, N, quadratic, out);
    if (*build) return cmd_build_calculus(file, N, route, out);
    if (*classify) return cmd_classify(file, out);
    if (*exp) return cmd_export(dir);
  } catch (const TooLarge& e) {
    std::cerr << "too large: " << e.what() << "\n";
    error_report("too_large", e.what());
    return kTooLarge;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ShapeError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NotASubmodule& e) {
    std::cerr << "not a submodule: " << e.what() << "\n";
    error_report("not_a_submodule", e.what());
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    error_report("error", e.what());
    return kFail;
  }
  return kOk;
}
