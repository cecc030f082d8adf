// Deterministic randomness for property checks.  mt19937_64 has a fixed
// sequence for a fixed seed on every platform; the reductions below avoid
// std::uniform_int_distribution, whose output is implementation-defined.

#pragma once

#include "schubert/poly.hpp"

#include <cstdint>
#include <random>

namespace schubert {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform-ish in [lo, hi]; the modulo bias is irrelevant for testing
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // nonzero coefficient in [-bound, bound]
  Int coefficient(int bound) {
    int c = range(1, bound);
    return next() & 1 ? Int(c) : Int(-c);
  }

 private:
  std::mt19937_64 eng_;
};

// Sparse random polynomial over x_1..x_k and torus variables fam_1..fam_m:
// `terms` monomials of total degree <= max_degree with coefficients in
// [-coeff_bound, coeff_bound] \ {0}.  Terms may cancel; that is fine.
Polynomial random_polynomial(Rng& rng, int k, int torus_count, Family torus_fam, int max_degree,
                             int terms, int coeff_bound);

}  // namespace schubert
