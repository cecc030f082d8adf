// Torus fixed points, restriction of classes to them, tangent-weight ratios
// for the Bott-Samelson sum, and the randomized exact check of the localized
// pushforward formula.

#pragma once

#include "schubert/classes.hpp"

#include <cstdint>
#include <utility>

namespace schubert {

// fixed point e_lambda of Gr(k, ncap+k); indices i_j = j + lambda_{k+1-j}
struct FixedPoint {
  Partition lambda;
  int k = 0;
  int ncap = 0;
  std::vector<int> indices;
};

// requires lambda inside the k x ncap box
FixedPoint fixed_point(const Partition& lambda, int k, int ncap);

// A fixed point of the Bott-Samelson resolution over e_lambda, labeled by
// w in S_k.  Admissible means the flags can actually nest:
// k+1-i <= i_{w(j)} <= ncap+k for every j <= i, which reduces to
// i_{w(m)} >= k+1-m for all m.
struct ResolutionFixedPoint {
  FixedPoint base;
  Permutation w;
  bool admissible = false;
};

ResolutionFixedPoint resolution_fixed_point(const FixedPoint& p, const Permutation& w);

// the lambda-independent exclusion test stated alongside the sum formula
// (exists i with w(i) < k+1-i); disagrees with the index-based one for some
// shapes, counted by the verification suite
bool simple_exclusion(const Permutation& w, int k);

// x_j -> -t_{i_j}; f should be a class (symmetric in x_1..x_k)
Polynomial localize_cohomology(const Polynomial& f, const FixedPoint& p);

// x_j -> 1 - E_{i_j} and T_j -> 1 - E_j^{-1}; result is Laurent in E
Polynomial localize_ktheory(const Polynomial& f, const FixedPoint& p);

// tangent-weight ratio at the resolution fixed point labeled by w, as an
// unreduced (numerator, denominator) pair over 1 <= i < j <= k:
//   cohomology: (t_{j-i} - t_{i_w(i)}) / (t_{i_w(j)} - t_{i_w(i)})
//   K-theory:   (1 - E_{i_w(i)} E_{j-i}^{-1}) / (1 - E_{i_w(i)} E_{i_w(j)}^{-1})
// The numerator vanishes identically exactly when the point is inadmissible.
std::pair<Polynomial, Polynomial> cohomology_weight(const FixedPoint& p, const Permutation& w);
std::pair<Polynomial, Polynomial> ktheory_weight(const FixedPoint& p, const Permutation& w);

struct VerifyReport {
  bool ok = false;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string detail;  // first failing case, empty when ok
};

// Check, at `trials` random exact specializations of the torus parameters,
// that the localization of pushforward(f) at e_lambda equals the weighted
// sum over all w in S_k of f at the w-permuted fixed-point arguments.
// Specializations are distinct integers (cohomology) or distinct positive
// rationals (K-theory); a clash redraws, 32 consecutive failures raise
// DegenerateSpecialization.
VerifyReport verify_localized_pushforward(const Polynomial& f, const Partition& lambda, int k,
                                          int ncap, Theory th, int trials, std::uint64_t seed);

}  // namespace schubert
