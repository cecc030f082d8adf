// Schubert classes on Gr(k, ncap+k): Bott-Samelson representatives, the
// factorial Schur / Grothendieck determinants, the pushforward along all
// three routes, double Grothendieck polynomials, and both straightening
// identities.
//
// Conventions: (x_i|t)^r = prod_{j=1}^r (x_i + t_j) in cohomology and
// prod_{j=1}^r (x_i + T_j - x_i T_j) in K-theory; torus indices never exceed
// ncap + k - 1 inside classes, ncap + k at fixed points.

#pragma once

#include "schubert/combinat.hpp"
#include "schubert/operators.hpp"
#include "schubert/poly.hpp"

namespace schubert {

enum class Theory { Cohomology, KTheory };
enum class Route { Determinant, Symmetrizer, Operator };

Family torus_family(Theory th);            // Tc or Tk
OperatorKind operator_kind(Theory th);     // divided difference or Demazure
const char* theory_name(Theory th);        // "coh", "k"
const char* route_name(Route r);           // "det", "sym", "op"

// x_i + t_j, or x_i + T_j - x_i T_j
Polynomial root_factor(int i, int j, Theory th);

// prod_{j=1}^{r} root_factor(i, j); r >= 0
Polynomial falling_product(int i, int r, Theory th);

// throws PartTooLarge unless lambda has <= k nonzero entries and every
// exponent lambda_i + k - i stays within torus index ncap + k - 1
void validate_class_shape(const Composition& lambda, int k, int ncap);

// prod_{i=1}^{k} prod_{j=k+1-i}^{k-i+lambda_i} root_factor(i, j)
Polynomial bott_samelson_class(const Composition& lambda, int k, int ncap, Theory th);

// prod_{i=1}^{k-1} prod_{j=1}^{k-i} root_factor(i, j): the factor that turns
// the longest-word operator into the pushforward
Polynomial pushforward_twist(int k, Theory th);

// det((x_i|t)^{lambda_j + k - j}) / Vandermonde; compositions allowed, where
// the determinant straightens itself (repeated exponents give 0)
Polynomial factorial_schur(const Composition& lambda, int k, int ncap);

// det((x_i|T)^{lambda_j + k - j} (1 - x_i)^{j-1}) / Vandermonde
Polynomial factorial_grothendieck(const Composition& lambda, int k, int ncap);

// Pushforward of an arbitrary class along the Bott-Samelson resolution:
// twist then apply the longest-word operator (Operator route) or the closed
// symmetrizer sum (Symmetrizer route).  The Determinant route only exists
// for composition input; use pushforward_class.
Polynomial pushforward(const Polynomial& f, int k, Theory th, Route route);

struct PushforwardResult {
  Polynomial value;
  Theory theory;
  Route route;
  Composition source;
};

PushforwardResult pushforward_class(const Composition& lambda, int k, int ncap, Theory th,
                                    Route route);

// 0 or sign * factorial_schur(sorted partition), via straighten_composition;
// equals factorial_schur(mu) and the other two routes
PushforwardResult straightened_schur(const Composition& mu, int k, int ncap);

// The K-theory straightening identity at position i, checked as a polynomial
// equation after clearing the denominator 1 - T_{lambda_{i+1}+k-i}:
//   (1 - T_{lam_{i+1}+k-i}) pf(P_lambda)
//     = sum_{j=lam_i+1}^{lam_{i+1}} (1 - T_{j+k-i}) pf(P_{mu(j)})
//     - sum_{j=lam_i+1}^{lam_{i+1}-1} (1 - T_{j+k-i}) pf(P_{nu(j)})
// with mu(j) = lambda with (lam_i, lam_{i+1}) -> (lam_{i+1}, j) and
// nu(j) the same with lam_{i+1}-1 in place of lam_{i+1}.  Vacuously true
// when lam_i >= lam_{i+1}.
bool check_ktheory_straightening(const Composition& lambda, int i, int k, int ncap);

// Double Grothendieck polynomials via the Demazure recursion downward from
// the longest element's product formula.  One table per thread; lookups
// memoize every permutation on the way up.
class GrothendieckTable {
 public:
  explicit GrothendieckTable(int n);
  const Polynomial& get(const Permutation& w);  // w in S_n

 private:
  int n_;
  std::map<std::vector<int>, Polynomial> memo_;
};

Polynomial double_grothendieck(const Permutation& w);

}  // namespace schubert
