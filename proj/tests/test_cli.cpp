#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "braidcalc/serialize.hpp"

using namespace braidcalc;
namespace fs = std::filesystem;

namespace {

const fs::path kData = BRAIDCALC_DATA_DIR;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(BRAIDCALC_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& rel) { return (kData / rel).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path tmp(const std::string& name) {
  fs::path d = fs::temp_directory_path() / "braidcalc_cli_test";
  fs::create_directories(d);
  return d / name;
}

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check " + data("hopf/sweedler.json") + " --kind hopf").code, 0);
  EXPECT_EQ(run("check " + data("invalid/kZ2_wrong_antipode.json") + " --kind hopf").code, 1);
  EXPECT_EQ(run("check " + data("invalid/malformed.json") + " --kind hopf").code, 2);
  EXPECT_EQ(run("check " + data("hopf/kZ2.json") + " --kind bimodule").code, 2);  // no "hopf" reference
  EXPECT_EQ(run("check " + data("crossed/kS3_k_e_sgn.json") + " --kind crossed").code, 0);
  EXPECT_EQ(run("check " + data("bimodule/sweedler_H_tensor_H.json") + " --kind bimodule").code, 0);
  EXPECT_EQ(run("check " + data("calculus/kZ3_line.json") + " --kind calculus").code, 0);
  EXPECT_EQ(run("check " + data("hopf/kZ2.json") + " --kind nonsense").code, 2);
}

TEST(Cli, BraidingWitness) {
  fs::path out = tmp("shear.json");
  CliRun r = run("check " + data("invalid/shear_braiding.json") + " --kind braiding --out " + out.string());
  EXPECT_EQ(r.code, 1);
  json rep = read_json_file(out);
  EXPECT_EQ(rep["schema"], kReportSchema);
  EXPECT_FALSE(rep["checks"]["yang_baxter"]["pass"].get<bool>());
  EXPECT_TRUE(rep.contains("witness"));
  EXPECT_EQ(run("check " + data("braiding/hecke2.json") + " --kind braiding").code, 0);
}

TEST(Cli, WedgeDims) {
  fs::path out = tmp("line.json");
  CliRun r = run("wedge-dims " + data("braiding/line_zeta3.json") + " --max-degree 4 --compare-quadratic --out " +
              out.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("UNEQUAL from degree 3"), std::string::npos) << r.out;
  json rep = read_json_file(out);
  EXPECT_EQ(rep["dims"], json({1, 1, 1, 0, 0}));
  EXPECT_EQ(rep["quadratic_dims"], json({1, 1, 1, 1, 1}));

  fs::path out2 = tmp("swap2.json");
  EXPECT_EQ(run("wedge-dims " + data("braiding/swap2.json") + " --max-degree 4 --out " + out2.string()).code, 0);
  EXPECT_EQ(read_json_file(out2)["dims"], json({1, 2, 1, 0, 0}));

  EXPECT_EQ(run("wedge-dims " + data("braiding/swap3.json") + " --max-degree 9").code, 3);
  EXPECT_EQ(run("wedge-dims " + data("invalid/shear_braiding.json") + " --max-degree 3").code, 1);
}

TEST(Cli, BuildCalculus) {
  fs::path out = tmp("kz2.json");
  CliRun r = run("build-calculus " + data("calculus/kZ2_universal.json") + " --max-degree 3 --route both --out " +
              out.string());
  EXPECT_EQ(r.code, 0) << r.out;
  json rep = read_json_file(out);
  EXPECT_EQ(rep["dims"][0], 2);
  EXPECT_EQ(rep["dims"][1], 2);
  EXPECT_EQ(rep["d_blocks"].size(), 3u);
  EXPECT_TRUE(rep["checks"]["routes_agree"]["pass"].get<bool>());

  fs::path bad = tmp("unstable.json");
  CliRun u = run("build-calculus " + data("calculus/kZ3_unstable.json") + " --out " + bad.string());
  EXPECT_EQ(u.code, 1);
  json b = read_json_file(bad);
  EXPECT_FALSE(b["checks"]["submodule"]["pass"].get<bool>());
  EXPECT_EQ(b["closure"].size(), 2u);

  EXPECT_EQ(run("build-calculus " + data("calculus/sweedler_universal.json") + " --max-degree 9").code, 3);
  EXPECT_EQ(run("build-calculus " + data("calculus/kZ3_line.json") + " --route maximal").code, 0);
}

TEST(Cli, Classify) {
  fs::path out = tmp("classify.json");
  CliRun r = run("classify " + data("calculus/sweedler_classify.json") + " --out " + out.string());
  EXPECT_EQ(r.code, 0) << r.out;
  json rep = read_json_file(out);
  EXPECT_TRUE(rep["generators_stable"].get<bool>());
  EXPECT_EQ(rep["dims"], json({12, 8, 4, 0}));
}

TEST(Cli, ReportsAreDeterministic) {
  for (const std::string& args :
       {"build-calculus " + data("calculus/kZ3_universal.json") + " --route both",
        "wedge-dims " + data("braiding/diag_zeta5.json") + " --max-degree 4 --compare-quadratic",
        "classify " + data("calculus/kZ3_classify.json")}) {
    fs::path a = tmp("det_a.json"), b = tmp("det_b.json");
    run(args + " --out " + a.string());
    run(args + " --out " + b.string());
    std::string sa = slurp(a), sb = slurp(b);
    EXPECT_FALSE(sa.empty()) << args;
    EXPECT_EQ(sa, sb) << args;
  }
}

TEST(Cli, ExportedCorpusMatchesBundledData) {
  fs::path dir = tmp("corpus");
  fs::remove_all(dir);
  ASSERT_EQ(run("export-corpus " + dir.string()).code, 0);
  std::size_t n = 0;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    fs::path rel = fs::relative(e.path(), dir);
    if (rel.parent_path() == "calculus") continue;  // hand-written bundles live beside the exported ones
    EXPECT_EQ(slurp(e.path()), slurp(kData / rel)) << rel;
    ++n;
  }
  EXPECT_GT(n, 50u);
}
