#include "braidcalc/corpus.hpp"
#include "braidcalc/errors.hpp"

namespace braidcalc::corpus {

std::vector<HopfAlgebraData> hopf_algebras() {
  return {cyclic_group_algebra(2), cyclic_group_algebra(3), s3_group_algebra(), sweedler_algebra(), taft_algebra(3)};
}

HopfAlgebraData hopf_algebra(const std::string& name) {
  if (name.rfind("kZ", 0) == 0 && name.size() == 3 && name[2] >= '1' && name[2] <= '6')
    return cyclic_group_algebra(name[2] - '0');
  if (name == "kS3") return s3_group_algebra();
  if (name == "sweedler" || name == "taft2") return sweedler_algebra();
  if (name == "taft3") return taft_algebra(3);
  if (name == "taft4") return taft_algebra(4);
  throw InvalidInput("unknown Hopf algebra '" + name + "'");
}

std::vector<CrossedModule> crossed_modules(const HopfAlgebraData& H) {
  std::vector<CrossedModule> out = {trivial_crossed(H), adjoint_crossed(H), coadjoint_crossed(H)};
  const std::string& name = H.name;
  if (name.rfind("kZ", 0) == 0) {
    int n = static_cast<int>(H.dim);
    if (n > 1) {
      std::vector<Scalar> chi(n), one(n, Scalar(1));
      for (int i = 0; i < n; ++i) chi[i] = Scalar::zeta(n, i);
      out.push_back(character_crossed(H, 1, chi));
      out.back().name = "k(g,ζ)";
      out.push_back(character_crossed(H, 1, one));
      out.back().name = "k(g,1)";
    }
  } else if (name == "kS3") {
    // elements ordered e, (01), (12), (02), two 3-cycles
    std::vector<Scalar> sign = {Scalar(1), Scalar(-1), Scalar(-1), Scalar(-1), Scalar(1), Scalar(1)};
    out.push_back(character_crossed(H, 0, sign));
    out.back().name = "k(e,sgn)";
  } else if (name == "sweedler" || name.rfind("taft", 0) == 0) {
    int n = 1;
    while (static_cast<std::size_t>(n * n) < H.dim) ++n;
    for (int a = 1; a < n; ++a) {
      std::vector<Scalar> chi(H.dim);
      for (int i = 0; i < n; ++i) chi[i * n] = Scalar::zeta(n, static_cast<long long>(i) * a);
      out.push_back(character_crossed(H, static_cast<std::size_t>(a * n), chi));
      out.back().name = "k(g^" + std::to_string(a) + ")";
    }
  }
  return out;
}

std::vector<HopfBimodule> hopf_bimodules(const HopfAlgebraData& H) {
  std::vector<HopfBimodule> out;
  for (const auto& M : crossed_modules(H)) out.push_back(smash(H, M));
  out.push_back(free_bimodule(H));
  return out;
}

}  // namespace braidcalc::corpus
