#include "braidcalc/corpus.hpp"

namespace braidcalc::corpus {

BraidedSpace diagonal_zeta5(Scalar lambda) {
  std::vector<std::vector<Scalar>> q(2, std::vector<Scalar>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) q[i][j] = Scalar::zeta(5, 1 + i + 2 * j);
  return BraidedSpace::diagonal(q, std::move(lambda));
}

BraidedSpace braided_line(const Scalar& mu, Scalar lambda) {
  Scalar q = mu / lambda;
  return BraidedSpace::line(q, std::move(lambda));
}

BraidedSpace hecke(const Scalar& q, Scalar lambda) {
  Matrix psi(4, 4);
  // basis e_i⊗e_j at index 2i+j
  psi.set(0, 0, q);
  psi.set(3, 3, q);
  psi.set(2, 1, Scalar(1));
  psi.set(1, 2, Scalar(1));
  psi.set(2, 2, q - q.inv());
  return BraidedSpace(2, std::move(psi), std::move(lambda));
}

std::vector<std::pair<std::string, BraidedSpace>> braidings(Scalar lambda) {
  std::vector<std::pair<std::string, BraidedSpace>> out;
  for (std::size_t d = 1; d <= 3; ++d) out.emplace_back("swap" + std::to_string(d), BraidedSpace::swap(d, lambda));
  out.emplace_back("diag_zeta5", diagonal_zeta5(lambda));
  out.emplace_back("line_zeta3", braided_line(Scalar::zeta(3), lambda));
  out.emplace_back("hecke2", hecke(Scalar(2), lambda));
  return out;
}

}  // namespace braidcalc::corpus
