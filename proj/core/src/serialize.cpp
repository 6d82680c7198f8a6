#include "braidcalc/serialize.hpp"

#include <fstream>
#include <sstream>

#include "braidcalc/errors.hpp"

namespace braidcalc {

namespace {

json int_or_string(const std::string& s, bool small, long long v) {
  if (small) return v;
  return s;
}

Rational rational_part(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected an integer or a decimal string, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t dim_field(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_unsigned() && !(d.is_number_integer() && d.get<long long>() >= 0))
    throw ParseError("'dim' must be a non-negative integer");
  return d.get<std::size_t>();
}

Matrix shaped(const json& j, const char* key, std::size_t rows, std::size_t cols) {
  Matrix m;
  try {
    m = matrix_from_json(field(j, key));
  } catch (const ParseError& e) {
    throw ParseError(std::string(key) + ": " + e.what());
  }
  if (m.rows() != rows || m.cols() != cols)
    throw ParseError(std::string(key) + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  return m;
}

std::string pair_key(int k, int l) { return std::to_string(k) + "," + std::to_string(l); }

}  // namespace

json to_json(const Scalar& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) {
    bool small = c.is_small();
    coeffs.push_back(json::array({int_or_string(c.num_str(), small, small ? c.small_num() : 0),
                                  int_or_string(c.den_str(), small, small ? c.small_den() : 0)}));
  }
  return json{{"conductor", s.conductor()}, {"coeffs", std::move(coeffs)}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
  const json& n = field(j, "conductor");
  if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 10000)
    throw ParseError("conductor must be a positive integer");
  const json& cs = field(j, "coeffs");
  if (!cs.is_array()) throw ParseError("coeffs must be an array");
  std::vector<Rational> c;
  for (const auto& pq : cs) {
    if (!pq.is_array() || pq.size() != 2) throw ParseError("each coefficient is [num, den]");
    Rational den = rational_part(pq[1]);
    if (den.is_zero()) throw ParseError("zero denominator");
    c.push_back(rational_part(pq[0]) / den);
  }
  int cond = n.get<int>();
  if (static_cast<int>(c.size()) > euler_phi(cond) * 4 + 4) throw ParseError("too many coefficients");
  if (c.empty()) c.push_back(Rational(0));
  return Scalar(cond, c);
}

json to_json(const Matrix& m) {
  json e = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) e.push_back(to_json(m(i, k)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(e)}};
}

Matrix matrix_from_json(const json& j) {
  const json& r = field(j, "rows");
  const json& c = field(j, "cols");
  if (!r.is_number_integer() || !c.is_number_integer() || r.get<long long>() < 0 || c.get<long long>() < 0)
    throw ParseError("rows and cols must be non-negative integers");
  const std::size_t rows = r.get<std::size_t>(), cols = c.get<std::size_t>();
  const json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows * cols)
    throw ParseError("entries must hold rows*cols = " + std::to_string(rows * cols) + " scalars");
  std::vector<Scalar> vals;
  vals.reserve(e.size());
  int cond = 1;
  for (const auto& x : e) {
    vals.push_back(scalar_from_json(x));
    cond = lcm_conductor(cond, vals.back().conductor());
  }
  Matrix m(rows, cols, cond);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m.set(i, k, vals[i * cols + k]);
  return m;
}

json to_json(const HopfAlgebraData& H) {
  return json{{"name", H.name},
              {"dim", H.dim},
              {"mult", to_json(H.mult)},
              {"unit", to_json(H.unit)},
              {"comult", to_json(H.comult)},
              {"counit", to_json(H.counit)},
              {"antipode", to_json(H.antipode)},
              {"antipode_inv", to_json(H.antipode_inv)}};
}

HopfAlgebraData hopf_from_json(const json& j) {
  HopfAlgebraData H;
  H.dim = dim_field(j);
  if (H.dim == 0) throw ParseError("a Hopf algebra has dim >= 1");
  const std::size_t h = H.dim;
  H.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "H";
  H.mult = shaped(j, "mult", h, h * h);
  H.unit = shaped(j, "unit", h, 1);
  H.comult = shaped(j, "comult", h * h, h);
  H.counit = shaped(j, "counit", 1, h);
  H.antipode = shaped(j, "antipode", h, h);
  H.antipode_inv = shaped(j, "antipode_inv", h, h);
  return H;
}

json to_json(const HopfBimodule& X) {
  json j;
  if (!X.name.empty()) j["name"] = X.name;
  j["dim"] = X.dim;
  j["mu_l"] = to_json(X.mu_l);
  j["mu_r"] = to_json(X.mu_r);
  j["nu_l"] = to_json(X.nu_l);
  j["nu_r"] = to_json(X.nu_r);
  return j;
}

HopfBimodule bimodule_from_json(const json& j) {
  HopfBimodule X;
  X.dim = dim_field(j);
  X.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "X";
  Matrix mu_l = matrix_from_json(field(j, "mu_l"));
  if (X.dim == 0) {
    X.mu_l = mu_l;
    X.mu_r = matrix_from_json(field(j, "mu_r"));
    X.nu_l = matrix_from_json(field(j, "nu_l"));
    X.nu_r = matrix_from_json(field(j, "nu_r"));
    return X;
  }
  if (mu_l.rows() != X.dim || mu_l.cols() % X.dim != 0) throw ParseError("mu_l shape does not match dim");
  const std::size_t h = mu_l.cols() / X.dim;
  X.mu_l = mu_l;
  X.mu_r = shaped(j, "mu_r", X.dim, X.dim * h);
  X.nu_l = shaped(j, "nu_l", h * X.dim, X.dim);
  X.nu_r = shaped(j, "nu_r", X.dim * h, X.dim);
  return X;
}

json to_json(const CrossedModule& M) {
  json j;
  if (!M.name.empty()) j["name"] = M.name;
  j["dim"] = M.dim;
  j["mu_r"] = to_json(M.act);
  j["nu_r"] = to_json(M.coact);
  return j;
}

CrossedModule crossed_from_json(const json& j) {
  CrossedModule M;
  M.dim = dim_field(j);
  M.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "M";
  M.act = matrix_from_json(field(j, "mu_r"));
  M.coact = matrix_from_json(field(j, "nu_r"));
  if (M.dim > 0) {
    if (M.act.rows() != M.dim || M.act.cols() % M.dim != 0) throw ParseError("mu_r shape does not match dim");
    const std::size_t h = M.act.cols() / M.dim;
    if (M.coact.rows() != M.dim * h || M.coact.cols() != M.dim) throw ParseError("nu_r shape does not match dim");
  }
  return M;
}

json braiding_to_json(std::size_t dim, const Matrix& psi, const Scalar& lambda) {
  return json{{"dim", dim}, {"psi", to_json(psi)}, {"lambda", to_json(lambda)}};
}

BraidingData braiding_from_json(const json& j) {
  BraidingData b;
  b.dim = dim_field(j);
  b.psi = shaped(j, "psi", b.dim * b.dim, b.dim * b.dim);
  b.lambda = j.contains("lambda") ? scalar_from_json(j["lambda"]) : Scalar(-1);
  return b;
}

json to_json(const GradedBialgebra& B) {
  json j;
  j["N"] = B.N;
  j["dims"] = B.dims;
  j["lambda"] = to_json(B.lambda);
  j["unit"] = to_json(B.unit);
  j["counit"] = to_json(B.counit);
  json m = json::object(), c = json::object();
  for (int k = 0; k <= B.N; ++k)
    for (int l = 0; k + l <= B.N; ++l) {
      m[pair_key(k, l)] = to_json(B.m(k, l));
      c[pair_key(k, l)] = to_json(B.delta(k, l));
    }
  j["mult"] = std::move(m);
  j["comult"] = std::move(c);
  json s = json::array(), d = json::array();
  for (const auto& x : B.antipode) s.push_back(to_json(x));
  for (const auto& x : B.diff) d.push_back(to_json(x));
  j["antipode"] = std::move(s);
  j["diff"] = std::move(d);
  return j;
}

GradedBialgebra graded_from_json(const json& j) {
  const json& dj = field(j, "dims");
  if (!dj.is_array() || dj.empty()) throw ParseError("dims must be a non-empty array");
  GradedBialgebra B = GradedBialgebra::with_dims(dj.get<std::vector<std::size_t>>());
  const auto& d = B.dims;
  B.lambda = scalar_from_json(field(j, "lambda"));
  B.unit = shaped(j, "unit", d[0], 1);
  B.counit = shaped(j, "counit", 1, d[0]);
  const json& m = field(j, "mult");
  const json& c = field(j, "comult");
  for (int k = 0; k <= B.N; ++k)
    for (int l = 0; k + l <= B.N; ++l) {
      B.mult[k][l] = shaped(m, pair_key(k, l).c_str(), d[k + l], d[k] * d[l]);
      B.comult[k][l] = shaped(c, pair_key(k, l).c_str(), d[k] * d[l], d[k + l]);
    }
  if (j.contains("antipode"))
    for (std::size_t n = 0; n < j["antipode"].size(); ++n) {
      Matrix s = matrix_from_json(j["antipode"][n]);
      if (n > static_cast<std::size_t>(B.N) || s.rows() != d[n] || s.cols() != d[n])
        throw ParseError("antipode block " + std::to_string(n) + " has the wrong shape");
      B.antipode.push_back(std::move(s));
    }
  if (j.contains("diff"))
    for (std::size_t n = 0; n < j["diff"].size(); ++n) {
      Matrix x = matrix_from_json(j["diff"][n]);
      if (n >= static_cast<std::size_t>(B.N) || x.rows() != d[n + 1] || x.cols() != d[n])
        throw ParseError("diff block " + std::to_string(n) + " has the wrong shape");
      B.diff.push_back(std::move(x));
    }
  return B;
}

json to_json(const Report& r) {
  json checks = json::object();
  for (const auto& [name, c] : r.checks) {
    json v;
    v["pass"] = c.pass;
    v["first_failure"] = c.pass ? json(nullptr) : json(c.first_failure);
    checks[name] = std::move(v);
  }
  return checks;
}

json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(p.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& p, const json& j, int indent) {
  std::ofstream out(p);
  if (!out) throw Error("cannot write " + p.string());
  out << j.dump(indent) << "\n";
}

json resolve_ref(const json& field_value, const std::filesystem::path& base_dir) {
  if (field_value.is_object()) return field_value;
  if (field_value.is_string()) return read_json_file(base_dir / field_value.get<std::string>());
  throw ParseError("expected an object or a file reference, got " + field_value.dump());
}

Matrix vectors_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  std::vector<Matrix> cols;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != n) throw ParseError("each vector needs " + std::to_string(n) + " entries");
    std::vector<Scalar> e;
    for (const auto& x : v) e.push_back(scalar_from_json(x));
    cols.push_back(Matrix::column(e));
  }
  if (cols.empty()) return Matrix(n, 0);
  return hstack(cols);
}

CalculusBundle bundle_from_json(const json& j, const std::filesystem::path& base_dir) {
  CalculusBundle b;
  b.H = hopf_from_json(resolve_ref(field(j, "hopf"), base_dir));
  const std::size_t h = b.H.dim;
  if (j.contains("X")) {
    b.explicit_calculus = true;
    b.calc.H = b.H;
    b.calc.X = bimodule_from_json(resolve_ref(j["X"], base_dir));
    b.calc.d = shaped(j, "d", b.calc.X.dim, h);
    if (b.calc.X.dim > 0 && b.calc.X.mu_l.cols() != h * b.calc.X.dim)
      throw ParseError("X is a bimodule over an algebra of another dimension");
    b.generators = Matrix(h, 0);
    b.candidates = Matrix(h, 0);
    return b;
  }
  const json& sub = field(j, "submodule");
  const json& amb = field(sub, "ambient");
  if (!amb.is_string() || amb.get<std::string>() != "ker_counit")
    throw ParseError("submodule ambient must be \"ker_counit\"");
  b.generators = sub.contains("generators") ? vectors_from_json(sub["generators"], h) : Matrix(h, 0);
  b.candidates = sub.contains("candidates") ? vectors_from_json(sub["candidates"], h) : Matrix(h, 0);
  return b;
}

FirstOrderCalculus bundle_calculus(const CalculusBundle& b) {
  if (b.explicit_calculus) return b.calc;
  return fodc_from_submodule(b.H, b.generators);
}

}  // namespace braidcalc
