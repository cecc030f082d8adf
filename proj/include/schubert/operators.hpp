// Divided-difference and Demazure operators on the x alphabet, word
// composition, and the closed symmetrizer form of the longest-word operator.

#pragma once

#include "schubert/combinat.hpp"
#include "schubert/poly.hpp"

namespace schubert {

enum class OperatorKind { DividedDifference, Demazure };

inline Polynomial permute_x(const Polynomial& p, const Permutation& w) {
  return permute_x(p, w.oneline());
}

// (f - s_i f) / (x_i - x_{i+1}); requires 1 <= i <= k-1
Polynomial divided_difference(const Polynomial& f, int i, int k);

// divided_difference of (1 - x_{i+1}) f; idempotent
Polynomial demazure(const Polynomial& f, int i, int k);

Polynomial apply_operator(const Polynomial& f, int i, int k, OperatorKind kind);

// Compose along the word right to left: the last letter acts first, so the
// result for word = reduced_word(w) is independent of the chosen word.
Polynomial apply_word(Polynomial f, const std::vector<int>& word, int k, OperatorKind kind);

Polynomial apply_permutation_operator(const Polynomial& f, const Permutation& w, OperatorKind kind);

// Longest-word operator as a single symmetrized sum:
//   DividedDifference: sum_w sign(w) w(f), divided by the Vandermonde
//   Demazure: the same with f multiplied by prod_{i<j} (1 - x_j) first
Polynomial jacobi_symmetrize(const Polynomial& f, int k, OperatorKind kind);

}  // namespace schubert
