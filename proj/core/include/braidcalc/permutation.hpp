#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace braidcalc {

// Element of S_j. Stored 0-based: p(i) is the image of position i.
// Product convention: (p*q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based, validated
  static Permutation identity(int j);
  static Permutation from_one_based(const std::vector<int>& images);
  // t_a swaps a and a+1 (1-based a, as in the generator notation).
  static Permutation transposition(int j, int a);
  static Permutation reversal(int j);
  // Product t_{a_1} ... t_{a_l}.
  static Permutation from_word(int j, const std::vector<int>& word);

  int size() const { return static_cast<int>(p_.size()); }
  int operator()(int i) const { return p_[i]; }
  const std::vector<int>& images() const { return p_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.p_ == b.p_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.p_ < b.p_; }

  // Inversion count.
  int length() const;
  // Bubble-sort word: the largest misplaced value is moved right first.
  std::vector<int> reduced_word() const;
  // A different reduced word: the smallest misplaced value is moved left first.
  std::vector<int> reduced_word_alt() const;
  // Removes a uniformly chosen right descent at each step.
  std::vector<int> reduced_word_random(std::mt19937_64& rng) const;

  std::string str() const;

 private:
  std::vector<int> p_;
};

using Partition = std::vector<int>;

enum class ShuffleSide { lower, upper };

// Upper: p increasing on each preimage of a target block (S^j_pi).
// Lower: the inverses (S_j^pi). Generated from label sequences, sorted.
std::vector<Permutation> shuffle_set(const Partition& pi, ShuffleSide side);

// Block swap moving the first a positions behind the next b.
Permutation block_swap(int a, int b);

// j!/(j_1!...j_r!)
std::uint64_t multinomial_coefficient(const Partition& pi);

// Disjoint juxtaposition p_1 ⊗ ... ⊗ p_r.
Permutation perm_tensor(const std::vector<Permutation>& ps);

}  // namespace braidcalc
