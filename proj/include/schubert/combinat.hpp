// Partitions, compositions, permutations, and the straightening rule that
// sorts a composition shifted by the staircase.

#pragma once

#include "schubert/errors.hpp"

#include <string>
#include <vector>

namespace schubert {

// weakly decreasing, nonnegative; trailing zeros are stripped, so equality is
// plain vector equality
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;  // 1-based, 0 beyond the last part
  int sum() const;
  const std::vector<int>& parts() const { return parts_; }
  std::string to_string() const;  // "2,1", empty partition prints "0"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// nonnegative entries, order significant
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;  // 1-based, 0 beyond the last entry
  int sum() const;
  bool is_partition() const;
  Partition to_partition() const;  // requires is_partition()
  const std::vector<int>& parts() const { return parts_; }
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// one-line notation, 1-based values
class Permutation {
 public:
  Permutation() = default;  // empty permutation
  explicit Permutation(std::vector<int> oneline);
  static Permutation identity(int k);
  static Permutation adjacent_transposition(int k, int i);  // swaps i, i+1 in S_k
  static Permutation longest_element(int k);                // k, k-1, ..., 1

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& oneline() const { return w_; }
  Permutation inverse() const;
  Permutation operator*(const Permutation& o) const;  // (u*v)(i) = u(v(i))
  long inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
  bool is_identity() const;
  std::string to_string() const;  // "3,1,2"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

// Reduced word by adjacent-transposition sorting of the one-line notation:
// s_{word[0]} * s_{word[1]} * ... reproduces w, word length = inversions.
std::vector<int> reduced_word(const Permutation& w);

// every reduced word of w (small groups only)
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

// all of S_k in lexicographic one-line order
std::vector<Permutation> symmetric_group(int k);

// all length-k compositions with entries in [0, maxpart], odometer order
std::vector<Composition> all_compositions(int k, int maxpart);

// all partitions inside the k x maxpart box, ascending by the same order
std::vector<Partition> partitions_in_box(int k, int maxpart);

Partition staircase(int k);  // (k-1, k-2, ..., 1, 0)

// true if mu contains lambda componentwise
bool contains(const Partition& mu, const Partition& lambda);

struct StraightenOutcome {
  enum class Kind { Zero, Signed } kind;
  int sign = 0;          // +-1 when Signed
  Partition partition;   // sort-descending(mu + delta) - delta
  Permutation witness;   // (partition + delta)_i = (mu + delta)_{witness(i)}
};

// Sort mu + staircase(k) descending.  A repeated entry yields Zero; otherwise
// the sorting permutation is the witness and sign is its sign.
StraightenOutcome straighten_composition(const Composition& mu, int k);

// i_j = j + lambda_{k+1-j}; requires length(lambda) <= k
std::vector<int> fixed_point_indices(const Partition& lambda, int k);

// The minimal-length permutation in S_n with w(i) = i + lambda_{k+1-i} for
// i <= k (remaining values ascending).  Requires lambda_1 <= n-k.
Permutation grassmannian_permutation(const Partition& lambda, int k, int n);

// ascents everywhere except possibly at position k
bool is_grassmannian(const Permutation& w, int k);

// inverse of grassmannian_permutation; requires is_grassmannian(w, k)
Partition partition_from_grassmannian(const Permutation& w, int k);

}  // namespace schubert
