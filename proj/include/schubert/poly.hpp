// Sparse multivariate polynomials with exact integer coefficients, Laurent
// exponents allowed on the E family only.  Terms are kept in one canonical
// order everywhere (arithmetic, printing, serialization): ascending total
// degree, ties broken at the first variable where the exponents differ,
// larger exponent first.

#pragma once

#include "schubert/errors.hpp"
#include "schubert/numbers.hpp"
#include "schubert/varid.hpp"

#include <map>
#include <utility>
#include <vector>

namespace schubert {

// Product of variable powers.  Factors are sorted by VarId; exponents are
// nonzero, and negative only for family E.
struct Monomial {
  using Factor = std::pair<VarId, int>;
  std::vector<Factor> factors;

  Monomial() = default;
  static Monomial var(VarId v, int exp = 1);

  bool is_constant() const { return factors.empty(); }
  int degree() const;  // sum of exponents, may be negative
  int exponent(VarId v) const;
  bool has_negative_exponent() const;

  Monomial operator*(const Monomial& o) const;
  Monomial without(VarId v) const;  // drop v entirely

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// true if a precedes b in the canonical term order
bool term_precedes(const Monomial& a, const Monomial& b);

struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return term_precedes(a, b);
  }
};

class Polynomial {
 public:
  using Term = std::pair<Monomial, Int>;

  Polynomial() = default;  // zero
  Polynomial(int c) : Polynomial(Int(c)) {}
  explicit Polynomial(Int c);
  static Polynomial variable(VarId v, int exp = 1);
  static Polynomial term(Monomial m, Int c);
  // normalizes: sorts, merges equal monomials, drops zero coefficients
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Int coefficient(const Monomial& m) const;
  int degree() const;  // max term degree; 0 for the zero polynomial
  bool has_negative_exponent() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(int e) const;  // e >= 0

 private:
  std::vector<Term> terms_;  // canonical order, coefficients nonzero
};

// convenience term builders
Polynomial xp(int i);               // x_i
Polynomial tp(int i);               // t_i
Polynomial Tp(int i);               // T_i
Polynomial ep(int i, int exp = 1);  // E_i^exp, exp may be negative

// Replace every occurrence of v in p by q.  When p contains v to a negative
// power, q must be invertible: a single term with coefficient +-1 and only
// E-family variables; otherwise NegativeExponentSubstitution is thrown.
Polynomial substitute(const Polynomial& p, VarId v, const Polynomial& q);

// Exact evaluation at a rational point.  Every variable of p needs a value
// (MissingAssignment); a zero value under a negative exponent raises
// ZeroAtLaurentPole.
Rat evaluate(const Polynomial& p, const std::map<VarId, Rat>& point);

// x_i -> x_{oneline[i-1]} for i <= oneline.size(); other variables fixed.
Polynomial permute_x(const Polynomial& p, const std::vector<int>& oneline);

// Exact quotient p / (x_i - x_j); throws NotDivisible when a remainder is left.
Polynomial exact_divide_linear(const Polynomial& p, int i, int j);

// Divide by the Vandermonde prod_{1<=a<b<=k} (x_a - x_b), factor by factor in
// row-major pair order (1,2),(1,3),...,(k-1,k).
Polynomial divide_vandermonde(Polynomial p, int k);

// invariant under every adjacent swap of x_1..x_k
bool is_symmetric(const Polynomial& p, int k);

}  // namespace schubert
