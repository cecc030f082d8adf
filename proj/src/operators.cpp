#include "schubert/operators.hpp"

namespace schubert {

Polynomial divided_difference(const Polynomial& f, int i, int k) {
  if (i < 1 || i >= k)
    throw IndexOutOfRange("divided_difference: need 1 <= i < k, got i = " + std::to_string(i) +
                          ", k = " + std::to_string(k));
  Polynomial num = f - permute_x(f, Permutation::adjacent_transposition(k, i));
  try {
    return num.is_zero() ? num : exact_divide_linear(num, i, i + 1);
  } catch (const NotDivisible&) {
    // f - s_i f is always antisymmetric in x_i, x_{i+1}
    throw std::logic_error("divided_difference: antisymmetric numerator not divisible");
  }
}

Polynomial demazure(const Polynomial& f, int i, int k) {
  return divided_difference((Polynomial(1) - xp(i + 1)) * f, i, k);
}

Polynomial apply_operator(const Polynomial& f, int i, int k, OperatorKind kind) {
  return kind == OperatorKind::DividedDifference ? divided_difference(f, i, k)
                                                 : demazure(f, i, k);
}

Polynomial apply_word(Polynomial f, const std::vector<int>& word, int k, OperatorKind kind) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = apply_operator(f, *it, k, kind);
  return f;
}

Polynomial apply_permutation_operator(const Polynomial& f, const Permutation& w,
                                      OperatorKind kind) {
  return apply_word(f, reduced_word(w), w.size(), kind);
}

Polynomial jacobi_symmetrize(const Polynomial& f, int k, OperatorKind kind) {
  Polynomial g = f;
  if (kind == OperatorKind::Demazure) {
    // prod_{1<=i<j<=k} (1 - x_j) = prod_j (1 - x_j)^{j-1}, attached before
    // the group sum
    for (int j = 2; j <= k; ++j) g *= (Polynomial(1) - xp(j)).pow(j - 1);
  }
  Polynomial num;
  for (const Permutation& w : symmetric_group(k)) {
    Polynomial image = permute_x(g, w);
    num += w.sign() > 0 ? image : -image;
  }
  return divide_vandermonde(std::move(num), k);
}

}  // namespace schubert
