#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "braidcalc/bimodule.hpp"
#include "braidcalc/braided_space.hpp"
#include "braidcalc/calculus.hpp"
#include "braidcalc/graded.hpp"
#include "braidcalc/report.hpp"

namespace braidcalc {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "braidcalc-report/1";

// Scalar: {"conductor": n, "coeffs": [[num, den], ...]}. Numerators and
// denominators are JSON integers when they fit in int64, decimal strings
// otherwise. On input a bare integer or a string "p/q" is also accepted.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// Matrix: {"rows", "cols", "entries"} with row-major entries.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"dim", "mult", "unit", "comult", "counit", "antipode", "antipode_inv"},
// plus an optional "name".
json to_json(const HopfAlgebraData& H);
HopfAlgebraData hopf_from_json(const json& j);

// {"dim", "mu_l", "mu_r", "nu_l", "nu_r"}
json to_json(const HopfBimodule& X);
HopfBimodule bimodule_from_json(const json& j);

// {"dim", "mu_r", "nu_r"}
json to_json(const CrossedModule& M);
CrossedModule crossed_from_json(const json& j);

// {"dim", "psi", "lambda"}. Only shapes are validated; the braid equation is
// left to the caller.
json braiding_to_json(std::size_t dim, const Matrix& psi, const Scalar& lambda);
struct BraidingData {
  std::size_t dim = 0;
  Matrix psi;
  Scalar lambda;
};
BraidingData braiding_from_json(const json& j);

// Blocks keyed by "k,l"; diff and antipode as arrays by degree.
json to_json(const GradedBialgebra& B);
GradedBialgebra graded_from_json(const json& j);

json to_json(const Report& r);

// Reads and parses a JSON file; ParseError with the path on failure.
json read_json_file(const std::filesystem::path& p);
// indent < 0 writes a single line.
void write_json_file(const std::filesystem::path& p, const json& j, int indent = 1);

// A document field that is either an inline object or a path relative to
// the directory of the referring file.
json resolve_ref(const json& field, const std::filesystem::path& base_dir);

// Columns from an array of vectors of length n.
Matrix vectors_from_json(const json& j, std::size_t n);

// Calculus bundle: {"hopf": ref, "submodule": {"ambient": "ker_counit",
// "generators": [...], "candidates": [...]}} or {"hopf": ref, "X": bimodule,
// "d": matrix}. Generator and candidate vectors are given in the basis of H
// and must lie in Ker ε.
struct CalculusBundle {
  HopfAlgebraData H;
  bool explicit_calculus = false;
  FirstOrderCalculus calc;  // explicit form only
  Matrix generators;        // h x k
  Matrix candidates;        // h x c, may be empty
};
CalculusBundle bundle_from_json(const json& j, const std::filesystem::path& base_dir);
// The explicit calculus, or fodc_from_submodule of the generators.
FirstOrderCalculus bundle_calculus(const CalculusBundle& b);

}  // namespace braidcalc
