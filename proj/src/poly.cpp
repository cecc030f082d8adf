#include "schubert/poly.hpp"

#include <algorithm>
#include <cassert>

namespace schubert {

Monomial Monomial::var(VarId v, int exp) {
  assert(exp != 0);
  assert(exp > 0 || v.family == Family::E);
  Monomial m;
  m.factors.emplace_back(v, exp);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  for (const auto& [u, e] : factors)
    if (u == v) return e;
  return 0;
}

bool Monomial::has_negative_exponent() const {
  for (const auto& [v, e] : factors)
    if (e < 0) return true;
  return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors.reserve(factors.size() + o.factors.size());
  auto a = factors.begin();
  auto b = o.factors.begin();
  while (a != factors.end() && b != o.factors.end()) {
    if (a->first == b->first) {
      int e = a->second + b->second;
      if (e != 0) out.factors.emplace_back(a->first, e);
      ++a, ++b;
    } else if (a->first < b->first) {
      out.factors.push_back(*a++);
    } else {
      out.factors.push_back(*b++);
    }
  }
  out.factors.insert(out.factors.end(), a, factors.end());
  out.factors.insert(out.factors.end(), b, o.factors.end());
  return out;
}

Monomial Monomial::without(VarId v) const {
  Monomial out;
  out.factors.reserve(factors.size());
  for (const auto& f : factors)
    if (f.first != v) out.factors.push_back(f);
  return out;
}

bool term_precedes(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  auto ia = a.factors.begin();
  auto ib = b.factors.begin();
  while (ia != a.factors.end() && ib != b.factors.end()) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second > ib->second;
      ++ia, ++ib;
    } else if (ia->first < ib->first) {
      return ia->second > 0;  // b reads exponent 0 here
    } else {
      return ib->second < 0;
    }
  }
  if (ia != a.factors.end()) return ia->second > 0;
  if (ib != b.factors.end()) return ib->second < 0;
  return false;
}

Polynomial::Polynomial(Int c) {
  if (c != 0) terms_.emplace_back(Monomial(), std::move(c));
}

Polynomial Polynomial::variable(VarId v, int exp) {
  Polynomial p;
  p.terms_.emplace_back(Monomial::var(v, exp), Int(1));
  return p;
}

Polynomial Polynomial::term(Monomial m, Int c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return term_precedes(a.first, b.first); });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  }
  return p;
}

Int Polynomial::coefficient(const Monomial& m) const {
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return Int(0);
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::has_negative_exponent() const {
  for (const auto& [m, c] : terms_)
    if (m.has_negative_exponent()) return true;
  return false;
}

// merge the sorted term lists, scaling o by sgn
static std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                                 const std::vector<Polynomial::Term>& b,
                                                 int sgn) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first == ib->first) {
      Int c = sgn > 0 ? ia->second + ib->second : ia->second - ib->second;
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia, ++ib;
    } else if (term_precedes(ia->first, ib->first)) {
      out.push_back(*ia++);
    } else {
      out.emplace_back(ib->first, sgn > 0 ? ib->second : -ib->second);
      ++ib;
    }
  }
  for (; ia != a.end(); ++ia) out.push_back(*ia);
  for (; ib != b.end(); ++ib) out.emplace_back(ib->first, sgn > 0 ? ib->second : -ib->second);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::map<Monomial, Int, TermOrder> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial p = a;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::pow(int e) const {
  assert(e >= 0);
  Polynomial acc(1);
  for (int i = 0; i < e; ++i) acc *= *this;
  return acc;
}

Polynomial xp(int i) { return Polynomial::variable(xv(i)); }
Polynomial tp(int i) { return Polynomial::variable(tv(i)); }
Polynomial Tp(int i) { return Polynomial::variable(Tv(i)); }
Polynomial ep(int i, int exp) { return Polynomial::variable(ev(i), exp); }

// q^{-1} for an invertible q: one term, coefficient +-1, E variables only
static bool invert_unit(const Polynomial& q, Polynomial& out) {
  if (q.term_count() != 1) return false;
  const auto& [m, c] = q.terms()[0];
  if (c != 1 && c != -1) return false;
  Monomial inv;
  for (const auto& [v, e] : m.factors) {
    if (v.family != Family::E) return false;
    inv.factors.emplace_back(v, -e);
  }
  out = Polynomial::term(std::move(inv), c);
  return true;
}

Polynomial substitute(const Polynomial& p, VarId v, const Polynomial& q) {
  int max_pos = 0, max_neg = 0;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(v);
    if (e > 0) max_pos = std::max(max_pos, e);
    if (e < 0) max_neg = std::max(max_neg, -e);
  }
  if (max_pos == 0 && max_neg == 0) return p;

  std::vector<Polynomial> pos(max_pos + 1), neg(max_neg + 1);
  pos[0] = Polynomial(1);
  for (int e = 1; e <= max_pos; ++e) pos[e] = pos[e - 1] * q;
  if (max_neg > 0) {
    Polynomial qinv;
    if (!invert_unit(q, qinv))
      throw NegativeExponentSubstitution("substitute: " + var_text(v) +
                                         " occurs with a negative exponent and the "
                                         "replacement is not an invertible monomial");
    neg[0] = Polynomial(1);
    for (int e = 1; e <= max_neg; ++e) neg[e] = neg[e - 1] * qinv;
  }

  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(v);
    if (e == 0) {
      out.emplace_back(m, c);
      continue;
    }
    Monomial rest = m.without(v);
    const Polynomial& base = e > 0 ? pos[e] : neg[-e];
    for (const auto& [bm, bc] : base.terms()) out.emplace_back(rest * bm, c * bc);
  }
  return Polynomial::from_terms(std::move(out));
}

Rat evaluate(const Polynomial& p, const std::map<VarId, Rat>& point) {
  Rat total(0);
  for (const auto& [m, c] : p.terms()) {
    Rat val(c);
    for (const auto& [v, e] : m.factors) {
      auto it = point.find(v);
      if (it == point.end()) throw MissingAssignment("evaluate: no value for " + var_text(v));
      if (e < 0 && it->second == 0)
        throw ZeroAtLaurentPole("evaluate: " + var_text(v) + " is zero under exponent " +
                                std::to_string(e));
      val *= rat_pow(it->second, e);
    }
    total += val;
  }
  return total;
}

Polynomial permute_x(const Polynomial& p, const std::vector<int>& oneline) {
  const int k = static_cast<int>(oneline.size());
  for (int i = 1; i <= k; ++i) {
    assert(oneline[i - 1] >= 1 && oneline[i - 1] <= k);
    (void)i;
  }
  std::vector<Polynomial::Term> out;
  out.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    Monomial nm = m;
    bool touched = false;
    for (auto& [v, e] : nm.factors) {
      if (v.family == Family::X && v.index <= k) {
        v.index = oneline[v.index - 1];
        touched = true;
      }
    }
    if (touched) std::sort(nm.factors.begin(), nm.factors.end());
    out.emplace_back(std::move(nm), c);
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial exact_divide_linear(const Polynomial& p, int i, int j) {
  assert(i >= 1 && j >= 1 && i != j);
  if (p.is_zero()) return p;
  const VarId vi = xv(i);

  // p as a univariate polynomial in x_i with polynomial coefficients
  std::map<int, std::vector<Polynomial::Term>> buckets;
  for (const auto& [m, c] : p.terms()) buckets[m.exponent(vi)].emplace_back(m.without(vi), c);
  int d = buckets.rbegin()->first;
  if (d == 0) throw NotDivisible("exact_divide_linear: no occurrence of x" + std::to_string(i));
  std::vector<Polynomial> coeff(d + 1);
  for (auto& [e, ts] : buckets) coeff[e] = Polynomial::from_terms(std::move(ts));

  // synthetic division by (x_i - x_j)
  const Polynomial xj = xp(j);
  std::vector<Polynomial> quot(d);
  quot[d - 1] = coeff[d];
  for (int e = d - 1; e >= 1; --e) quot[e - 1] = coeff[e] + xj * quot[e];
  Polynomial rem = coeff[0] + xj * quot[0];
  if (!rem.is_zero())
    throw NotDivisible("exact_divide_linear: remainder at (x" + std::to_string(i) + " - x" +
                       std::to_string(j) + ")");

  std::vector<Polynomial::Term> out;
  for (int e = 0; e < d; ++e) {
    if (quot[e].is_zero()) continue;
    Monomial xe = e > 0 ? Monomial::var(vi, e) : Monomial();
    for (const auto& [m, c] : quot[e].terms()) out.emplace_back(m * xe, c);
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial divide_vandermonde(Polynomial p, int k) {
  for (int a = 1; a < k; ++a)
    for (int b = a + 1; b <= k; ++b) p = exact_divide_linear(p, a, b);
  return p;
}

bool is_symmetric(const Polynomial& p, int k) {
  std::vector<int> w(k);
  for (int a = 1; a < k; ++a) {
    for (int i = 0; i < k; ++i) w[i] = i + 1;
    std::swap(w[a - 1], w[a]);
    if (permute_x(p, w) != p) return false;
  }
  return true;
}

}  // namespace schubert
