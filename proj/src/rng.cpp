#include "schubert/rng.hpp"

namespace schubert {

Polynomial random_polynomial(Rng& rng, int k, int torus_count, Family torus_fam, int max_degree,
                             int terms, int coeff_bound) {
  std::vector<VarId> alphabet;
  for (int i = 1; i <= k; ++i) alphabet.push_back(xv(i));
  for (int i = 1; i <= torus_count; ++i) alphabet.push_back({torus_fam, i});

  std::vector<Polynomial::Term> out;
  out.reserve(terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int deg = rng.range(0, max_degree);
    for (int d = 0; d < deg; ++d) {
      VarId v = alphabet[rng.range(0, static_cast<int>(alphabet.size()) - 1)];
      m = m * Monomial::var(v);
    }
    out.emplace_back(std::move(m), rng.coefficient(coeff_bound));
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace schubert
