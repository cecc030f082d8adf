#include "schubert/classes.hpp"

#include <cassert>

namespace schubert {

Family torus_family(Theory th) { return th == Theory::Cohomology ? Family::Tc : Family::Tk; }

OperatorKind operator_kind(Theory th) {
  return th == Theory::Cohomology ? OperatorKind::DividedDifference : OperatorKind::Demazure;
}

const char* theory_name(Theory th) { return th == Theory::Cohomology ? "coh" : "k"; }

const char* route_name(Route r) {
  switch (r) {
    case Route::Determinant: return "det";
    case Route::Symmetrizer: return "sym";
    case Route::Operator: return "op";
  }
  return "?";
}

Polynomial root_factor(int i, int j, Theory th) {
  if (i < 1 || j < 1) throw IndexOutOfRange("root_factor: indices must be >= 1");
  if (th == Theory::Cohomology) return xp(i) + tp(j);
  // x + T - xT
  return xp(i) + Tp(j) - xp(i) * Tp(j);
}

Polynomial falling_product(int i, int r, Theory th) {
  if (r < 0) throw IndexOutOfRange("falling_product: negative exponent");
  Polynomial acc(1);
  for (int j = 1; j <= r; ++j) acc *= root_factor(i, j, th);
  return acc;
}

void validate_class_shape(const Composition& lambda, int k, int ncap) {
  if (k < 1) throw IndexOutOfRange("k must be >= 1");
  if (ncap < 0) throw IndexOutOfRange("n-cap must be >= 0");
  for (int i = k + 1; i <= lambda.length(); ++i)
    if (lambda.part(i) != 0)
      throw PartTooLarge("shape " + lambda.to_string() + " has more than k = " +
                         std::to_string(k) + " nonzero entries");
  for (int i = 1; i <= k; ++i) {
    // torus index reaches lambda_i + k - i, which must stay <= ncap + k - 1
    if (lambda.part(i) > ncap + i - 1)
      throw PartTooLarge("part " + std::to_string(lambda.part(i)) + " at position " +
                         std::to_string(i) + " exceeds the torus index bound for n-cap = " +
                         std::to_string(ncap));
  }
}

Polynomial bott_samelson_class(const Composition& lambda, int k, int ncap, Theory th) {
  validate_class_shape(lambda, k, ncap);
  Polynomial acc(1);
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1 - i; j <= k - i + lambda.part(i); ++j) acc *= root_factor(i, j, th);
  return acc;
}

Polynomial pushforward_twist(int k, Theory th) {
  Polynomial acc(1);
  for (int i = 1; i <= k - 1; ++i)
    for (int j = 1; j <= k - i; ++j) acc *= root_factor(i, j, th);
  return acc;
}

// det(entry(row, col)) for the Leibniz sum over S_k with sign
static Polynomial leibniz_determinant(const std::vector<std::vector<Polynomial>>& a, int k) {
  Polynomial det;
  for (const Permutation& w : symmetric_group(k)) {
    Polynomial prod(1);
    for (int col = 1; col <= k; ++col) prod *= a[w(col) - 1][col - 1];
    det += w.sign() > 0 ? prod : -prod;
  }
  return det;
}

Polynomial factorial_schur(const Composition& lambda, int k, int ncap) {
  validate_class_shape(lambda, k, ncap);
  std::vector<std::vector<Polynomial>> a(k, std::vector<Polynomial>(k));
  for (int row = 1; row <= k; ++row)
    for (int col = 1; col <= k; ++col)
      a[row - 1][col - 1] = falling_product(row, lambda.part(col) + k - col, Theory::Cohomology);
  return divide_vandermonde(leibniz_determinant(a, k), k);
}

Polynomial factorial_grothendieck(const Composition& lambda, int k, int ncap) {
  validate_class_shape(lambda, k, ncap);
  std::vector<std::vector<Polynomial>> a(k, std::vector<Polynomial>(k));
  for (int row = 1; row <= k; ++row) {
    Polynomial unit = Polynomial(1) - xp(row);
    for (int col = 1; col <= k; ++col)
      a[row - 1][col - 1] =
          falling_product(row, lambda.part(col) + k - col, Theory::KTheory) * unit.pow(col - 1);
  }
  return divide_vandermonde(leibniz_determinant(a, k), k);
}

Polynomial pushforward(const Polynomial& f, int k, Theory th, Route route) {
  Polynomial g = pushforward_twist(k, th) * f;
  switch (route) {
    case Route::Operator:
      return apply_permutation_operator(g, Permutation::longest_element(k), operator_kind(th));
    case Route::Symmetrizer:
      return jacobi_symmetrize(g, k, operator_kind(th));
    case Route::Determinant:
      throw Error("the determinant route needs a composition; use pushforward_class");
  }
  return {};
}

PushforwardResult pushforward_class(const Composition& lambda, int k, int ncap, Theory th,
                                    Route route) {
  if (route == Route::Determinant) {
    Polynomial v = th == Theory::Cohomology ? factorial_schur(lambda, k, ncap)
                                            : factorial_grothendieck(lambda, k, ncap);
    return {std::move(v), th, route, lambda};
  }
  Polynomial f = bott_samelson_class(lambda, k, ncap, th);
  return {pushforward(f, k, th, route), th, route, lambda};
}

PushforwardResult straightened_schur(const Composition& mu, int k, int ncap) {
  StraightenOutcome out = straighten_composition(mu, k);
  if (out.kind == StraightenOutcome::Kind::Zero)
    return {Polynomial(), Theory::Cohomology, Route::Determinant, mu};
  Polynomial v = factorial_schur(Composition(out.partition.parts()), k, ncap);
  if (out.sign < 0) v = -v;
  return {std::move(v), Theory::Cohomology, Route::Determinant, mu};
}

bool check_ktheory_straightening(const Composition& lambda, int i, int k, int ncap) {
  if (i < 1 || i >= k) throw IndexOutOfRange("straightening position out of range");
  const int a = lambda.part(i), b = lambda.part(i + 1);
  if (a >= b) return true;  // nothing to straighten

  auto swapped = [&](int pos_i, int pos_i1) {
    std::vector<int> parts = lambda.parts();
    parts.resize(std::max(lambda.length(), i + 1), 0);
    parts[i - 1] = pos_i;
    parts[i] = pos_i1;
    return Composition(std::move(parts));
  };
  auto push = [&](const Composition& c) {
    return pushforward_class(c, k, ncap, Theory::KTheory, Route::Operator).value;
  };
  auto multiplier = [&](int j) { return Polynomial(1) - Tp(j + k - i); };

  Polynomial lhs = multiplier(b) * push(lambda);
  Polynomial rhs;
  for (int j = a + 1; j <= b; ++j) rhs += multiplier(j) * push(swapped(b, j));
  for (int j = a + 1; j <= b - 1; ++j) rhs -= multiplier(j) * push(swapped(b - 1, j));
  return lhs == rhs;
}

GrothendieckTable::GrothendieckTable(int n) : n_(n) {
  assert(n >= 1);
  // longest element: product over i + j <= n of the K root factors
  Polynomial top(1);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j + i <= n; ++j) top *= root_factor(i, j, Theory::KTheory);
  memo_[Permutation::longest_element(n).oneline()] = std::move(top);
}

const Polynomial& GrothendieckTable::get(const Permutation& w) {
  if (w.size() != n_) throw IndexOutOfRange("GrothendieckTable: permutation size mismatch");
  auto it = memo_.find(w.oneline());
  if (it != memo_.end()) return it->second;
  // ascend toward the longest element through the smallest ascent
  int asc = 0;
  for (int i = 1; i < n_; ++i) {
    if (w(i) < w(i + 1)) {
      asc = i;
      break;
    }
  }
  assert(asc > 0);
  const Polynomial& parent = get(w * Permutation::adjacent_transposition(n_, asc));
  Polynomial val = demazure(parent, asc, n_);
  return memo_.emplace(w.oneline(), std::move(val)).first->second;
}

Polynomial double_grothendieck(const Permutation& w) {
  GrothendieckTable table(w.size());
  return table.get(w);
}

}  // namespace schubert
