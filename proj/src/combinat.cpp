#include "schubert/combinat.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace schubert {

static std::string join_ints(const std::vector<int>& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error("partition parts must be weakly decreasing: " + join_ints(parts_));
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(int i) const {
  assert(i >= 1);
  return i <= length() ? parts_[i - 1] : 0;
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const { return join_ints(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw Error("composition entries must be nonnegative");
}

int Composition::part(int i) const {
  assert(i >= 1);
  return i <= length() ? parts_[i - 1] : 0;
}

int Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_partition() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) return false;
  return true;
}

Partition Composition::to_partition() const {
  if (!is_partition()) throw Error("composition is not weakly decreasing: " + to_string());
  return Partition(parts_);
}

std::string Composition::to_string() const { return join_ints(parts_); }

Permutation::Permutation(std::vector<int> oneline) : w_(std::move(oneline)) {
  std::vector<bool> seen(w_.size(), false);
  for (int v : w_) {
    if (v < 1 || v > size() || seen[v - 1])
      throw Error("not a permutation in one-line notation: " + join_ints(w_));
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> w(k);
  std::iota(w.begin(), w.end(), 1);
  Permutation p;
  p.w_ = std::move(w);
  return p;
}

Permutation Permutation::adjacent_transposition(int k, int i) {
  assert(i >= 1 && i < k);
  Permutation p = identity(k);
  std::swap(p.w_[i - 1], p.w_[i]);
  return p;
}

Permutation Permutation::longest_element(int k) {
  std::vector<int> w(k);
  for (int i = 0; i < k; ++i) w[i] = k - i;
  Permutation p;
  p.w_ = std::move(w);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.w_.resize(w_.size());
  for (int i = 1; i <= size(); ++i) p.w_[w_[i - 1] - 1] = i;
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  assert(size() == o.size());
  Permutation p;
  p.w_.resize(w_.size());
  for (int i = 1; i <= size(); ++i) p.w_[i - 1] = w_[o.w_[i - 1] - 1];
  return p;
}

long Permutation::inversions() const {
  long n = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (w_[i] > w_[j]) ++n;
  return n;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (w_[i] != i + 1) return false;
  return true;
}

std::string Permutation::to_string() const { return join_ints(w_); }

std::vector<int> reduced_word(const Permutation& w) {
  // Right-multiplying by a descent s_j swaps the one-line entries at j, j+1
  // and strips the last letter of some reduced word; collecting the letters
  // in reverse yields a word for w.
  std::vector<int> word;
  std::vector<int> v = w.oneline();
  const int k = static_cast<int>(v.size());
  bool sorted = false;
  while (!sorted) {
    sorted = true;
    for (int j = 0; j + 1 < k; ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        word.push_back(j + 1);
        sorted = false;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> words;
  const int k = w.size();
  for (int j = 1; j < k; ++j) {
    if (w(j) > w(j + 1)) {
      Permutation shorter = w * Permutation::adjacent_transposition(k, j);
      for (auto word : all_reduced_words(shorter)) {
        word.push_back(j);
        words.push_back(std::move(word));
      }
    }
  }
  return words;
}

std::vector<Permutation> symmetric_group(int k) {
  std::vector<int> w(k);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Composition> all_compositions(int k, int maxpart) {
  std::vector<Composition> out;
  std::vector<int> cur(k, 0);
  for (;;) {
    out.push_back(Composition(cur));
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == maxpart) cur[pos--] = 0;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

std::vector<Partition> partitions_in_box(int k, int maxpart) {
  std::vector<Partition> out;
  for (const Composition& c : all_compositions(k, maxpart))
    if (c.is_partition()) out.push_back(c.to_partition());
  return out;
}

Partition staircase(int k) {
  std::vector<int> parts;
  for (int i = k - 1; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

bool contains(const Partition& mu, const Partition& lambda) {
  for (int i = 1; i <= std::max(mu.length(), lambda.length()); ++i)
    if (lambda.part(i) > mu.part(i)) return false;
  return true;
}

StraightenOutcome straighten_composition(const Composition& mu, int k) {
  if (mu.length() > k) {
    for (int i = k + 1; i <= mu.length(); ++i)
      if (mu.part(i) != 0)
        throw PartTooLarge("straighten: composition has more than k = " + std::to_string(k) +
                           " nonzero entries");
  }
  // shifted entries mu_i + (k - i), i = 1..k
  std::vector<std::pair<int, int>> shifted(k);  // (value, source position)
  for (int i = 1; i <= k; ++i) shifted[i - 1] = {mu.part(i) + k - i, i};

  std::vector<std::pair<int, int>> sorted = shifted;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int i = 0; i + 1 < k; ++i) {
    if (sorted[i].first == sorted[i + 1].first) return {StraightenOutcome::Kind::Zero, 0, {}, {}};
  }

  std::vector<int> parts(k), oneline(k);
  for (int i = 0; i < k; ++i) {
    parts[i] = sorted[i].first - (k - (i + 1));
    oneline[i] = sorted[i].second;
  }
  Permutation witness(std::move(oneline));
  return {StraightenOutcome::Kind::Signed, witness.sign(), Partition(std::move(parts)), witness};
}

std::vector<int> fixed_point_indices(const Partition& lambda, int k) {
  if (lambda.length() > k)
    throw PartTooLarge("fixed point: partition has more than k = " + std::to_string(k) + " parts");
  std::vector<int> idx(k);
  for (int j = 1; j <= k; ++j) idx[j - 1] = j + lambda.part(k + 1 - j);
  return idx;
}

Permutation grassmannian_permutation(const Partition& lambda, int k, int n) {
  if (lambda.length() > k)
    throw PartTooLarge("grassmannian_permutation: more than k parts");
  if (lambda.part(1) > n - k)
    throw PartTooLarge("grassmannian_permutation: part " + std::to_string(lambda.part(1)) +
                       " exceeds n - k = " + std::to_string(n - k));
  std::vector<int> w;
  w.reserve(n);
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= k; ++i) {
    int v = i + lambda.part(k + 1 - i);
    w.push_back(v);
    used[v] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!used[v]) w.push_back(v);
  return Permutation(std::move(w));
}

bool is_grassmannian(const Permutation& w, int k) {
  for (int i = 1; i < w.size(); ++i)
    if (i != k && w(i) > w(i + 1)) return false;
  return true;
}

Partition partition_from_grassmannian(const Permutation& w, int k) {
  if (!is_grassmannian(w, k))
    throw Error("permutation has a descent away from position " + std::to_string(k));
  std::vector<int> parts(k);
  for (int i = 1; i <= k; ++i) parts[i - 1] = w(k + 1 - i) - (k + 1 - i);
  return Partition(std::move(parts));
}

}  // namespace schubert
