#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidcalc/bimodule.hpp"
#include "braidcalc/braided_space.hpp"

namespace braidcalc::corpus {

// Diagonal braiding on a 2-dim space with q_ij = ζ_5^{1+i+2j}.
BraidedSpace diagonal_zeta5(Scalar lambda = Scalar(-1));
// 1-dim space whose multinomials are Gaussian in mu = lambda * q.
BraidedSpace braided_line(const Scalar& mu, Scalar lambda = Scalar(-1));
// Non-diagonal 2-dim solution of the braid equation (Hecke type, q = 2).
BraidedSpace hecke(const Scalar& q = Scalar(2), Scalar lambda = Scalar(-1));

// swap d=1..3, diagonal ζ_5, braided line at μ=ζ_3, Hecke.
std::vector<std::pair<std::string, BraidedSpace>> braidings(Scalar lambda = Scalar(-1));

// kZ2, kZ3, kS3, Sweedler, Taft(3).
std::vector<HopfAlgebraData> hopf_algebras();
// Looks up by name: kZ1..kZ6, kS3, sweedler, taft3..taft4.
HopfAlgebraData hopf_algebra(const std::string& name);

// Trivial, adjoint, coadjoint and the one-dimensional modules that exist for
// this algebra: over kZn grade g with χ(g) = ζ_n and χ trivial; over kS3 the
// sign character in grade e; over Taft(n) grade g^a with χ(g) = ζ_n^a.
std::vector<CrossedModule> crossed_modules(const HopfAlgebraData& H);
// Smash products of the crossed modules plus the free bimodule H⊗H.
std::vector<HopfBimodule> hopf_bimodules(const HopfAlgebraData& H);

}  // namespace braidcalc::corpus
