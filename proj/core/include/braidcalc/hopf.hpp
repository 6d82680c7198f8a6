#pragma once

#include <functional>
#include <string>
#include <vector>

#include "braidcalc/matrix.hpp"
#include "braidcalc/report.hpp"

namespace braidcalc {

// Finite-dimensional Hopf algebra by structure constants. Basis element 0
// is not required to be the unit, but every bundled example has it so.
struct HopfAlgebraData {
  std::string name;
  std::size_t dim = 0;
  Matrix mult;          // H⊗H → H
  Matrix unit;          // column
  Matrix comult;        // H → H⊗H
  Matrix counit;        // row
  Matrix antipode;      // H → H
  Matrix antipode_inv;  // H → H

  int conductor() const;
};

Report check_hopf(const HopfAlgebraData& H);

// Records a == b, naming the first differing entry on failure.
void record_equal(Report& r, const std::string& name, const Matrix& a, const Matrix& b, const std::string& where = {});

// Product of two columns of H⊗H: (a⊗b)(c⊗d) = ac⊗bd.
Matrix tensor_square_product(const HopfAlgebraData& H, const Matrix& u, const Matrix& v);

// Builds a Hopf algebra from a basis multiplication rule and the images of
// each basis element under Δ, ε, S (as coordinate vectors). S⁻¹ is the
// matrix inverse of S.
struct BasisHopfRule {
  std::string name;
  std::size_t dim = 0;
  std::function<std::vector<Scalar>(std::size_t, std::size_t)> mult;
  std::vector<Scalar> unit;
  std::function<std::vector<Scalar>(std::size_t)> comult;
  std::function<Scalar(std::size_t)> counit;
  std::function<std::vector<Scalar>(std::size_t)> antipode;
};
HopfAlgebraData hopf_from_rule(const BasisHopfRule& rule);

// Group algebra of a finite group given by its multiplication table
// (element 0 the identity).
HopfAlgebraData group_algebra(const std::string& name, const std::vector<std::vector<int>>& table);
HopfAlgebraData cyclic_group_algebra(int n);
HopfAlgebraData s3_group_algebra();
// Taft algebra of dimension n²: g^n = 1, x^n = 0, xg = ζ_n gx, Δg = g⊗g,
// Δx = x⊗1 + g⊗x. Basis g^i x^j at index n*i + j. Taft(2) is Sweedler's.
HopfAlgebraData taft_algebra(int n);
HopfAlgebraData sweedler_algebra();
// Trivial Hopf algebra k.
HopfAlgebraData ground_field();

}  // namespace braidcalc
