#include "braidcalc/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "braidcalc/errors.hpp"

namespace braidcalc {

Permutation::Permutation(std::vector<int> images) : p_(std::move(images)) {
  std::vector<char> seen(p_.size(), 0);
  for (int v : p_) {
    if (v < 0 || v >= size() || seen[v]) throw InvalidInput("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int j) {
  std::vector<int> v(j);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> v(images);
  for (int& x : v) --x;
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int j, int a) {
  if (a < 1 || a >= j) throw InvalidInput("transposition index out of range");
  Permutation t = identity(j);
  std::swap(t.p_[a - 1], t.p_[a]);
  return t;
}

Permutation Permutation::reversal(int j) {
  std::vector<int> v(j);
  for (int i = 0; i < j; ++i) v[i] = j - 1 - i;
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(int j, const std::vector<int>& word) {
  Permutation p = identity(j);
  for (int a : word) p = p * transposition(j, a);
  return p;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> v(p_);
  for (int& x : v) ++x;
  return v;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(p_.size());
  for (int i = 0; i < size(); ++i) v[p_[i]] = i;
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ShapeError("permutation sizes differ");
  std::vector<int> v(a.p_.size());
  for (int i = 0; i < a.size(); ++i) v[i] = a.p_[b.p_[i]];
  Permutation r;
  r.p_ = std::move(v);
  return r;
}

int Permutation::length() const {
  int n = 0;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (p_[a] > p_[b]) ++n;
  return n;
}

// Right multiplication by t_a swaps the images at positions a-1, a; it
// shortens p exactly when those images form a descent. The recorded
// generators are reversed at the end.
std::vector<int> Permutation::reduced_word() const {
  std::vector<int> q = p_, rec;
  for (int v = size() - 1; v >= 0; --v) {
    int pos = static_cast<int>(std::find(q.begin(), q.end(), v) - q.begin());
    for (; pos < v; ++pos) {
      std::swap(q[pos], q[pos + 1]);
      rec.push_back(pos + 1);
    }
  }
  std::reverse(rec.begin(), rec.end());
  return rec;
}

std::vector<int> Permutation::reduced_word_alt() const {
  std::vector<int> q = p_, rec;
  for (int v = 0; v < size(); ++v) {
    int pos = static_cast<int>(std::find(q.begin(), q.end(), v) - q.begin());
    for (; pos > v; --pos) {
      std::swap(q[pos - 1], q[pos]);
      rec.push_back(pos);
    }
  }
  std::reverse(rec.begin(), rec.end());
  return rec;
}

std::vector<int> Permutation::reduced_word_random(std::mt19937_64& rng) const {
  std::vector<int> q = p_, rec, desc;
  for (;;) {
    desc.clear();
    for (int i = 0; i + 1 < size(); ++i)
      if (q[i] > q[i + 1]) desc.push_back(i);
    if (desc.empty()) break;
    int i = desc[std::uniform_int_distribution<std::size_t>(0, desc.size() - 1)(rng)];
    std::swap(q[i], q[i + 1]);
    rec.push_back(i + 1);
  }
  std::reverse(rec.begin(), rec.end());
  return rec;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(p_[i] + 1);
  return s + "]";
}

std::vector<Permutation> shuffle_set(const Partition& pi, ShuffleSide side) {
  std::vector<int> labels, offset;
  int j = 0;
  for (std::size_t k = 0; k < pi.size(); ++k) {
    if (pi[k] < 0) throw InvalidInput("negative part in partition");
    offset.push_back(j);
    j += pi[k];
    labels.insert(labels.end(), pi[k], static_cast<int>(k));
  }
  std::vector<Permutation> out;
  do {
    std::vector<int> next(offset), img(j);
    for (int p = 0; p < j; ++p) img[p] = next[labels[p]]++;
    Permutation s(std::move(img));
    out.push_back(side == ShuffleSide::upper ? s : s.inverse());
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Permutation block_swap(int a, int b) {
  std::vector<int> v(a + b);
  for (int p = 0; p < a; ++p) v[p] = p + b;
  for (int p = a; p < a + b; ++p) v[p] = p - a;
  return Permutation(std::move(v));
}

std::uint64_t multinomial_coefficient(const Partition& pi) {
  std::uint64_t r = 1;
  int n = 0;
  for (int k : pi)
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(++n) / static_cast<std::uint64_t>(i);
  return r;
}

Permutation perm_tensor(const std::vector<Permutation>& ps) {
  std::vector<int> v;
  int off = 0;
  for (const auto& p : ps) {
    for (int x : p.images()) v.push_back(x + off);
    off += p.size();
  }
  return Permutation(std::move(v));
}

}  // namespace braidcalc
