#include "schubert/classes.hpp"

#include <doctest.h>

using namespace schubert;

namespace {

Polynomial coh_root(int i, int j) { return xp(i) + tp(j); }
Polynomial k_root(int i, int j) { return xp(i) + Tp(j) - xp(i) * Tp(j); }

}  // namespace

TEST_CASE("root factors and falling products") {
  CHECK(root_factor(1, 2, Theory::Cohomology) == coh_root(1, 2));
  CHECK(root_factor(2, 1, Theory::KTheory) == k_root(2, 1));
  CHECK(falling_product(1, 0, Theory::Cohomology) == Polynomial(1));
  CHECK(falling_product(1, 2, Theory::Cohomology) == coh_root(1, 1) * coh_root(1, 2));
  CHECK(falling_product(2, 2, Theory::KTheory) == k_root(2, 1) * k_root(2, 2));
  CHECK_THROWS_AS(root_factor(0, 1, Theory::Cohomology), IndexOutOfRange);
}

TEST_CASE("shape validation") {
  CHECK_NOTHROW(validate_class_shape(Composition({2}), 1, 2));
  CHECK_THROWS_AS(validate_class_shape(Composition({3}), 1, 2), PartTooLarge);
  // later positions have looser torus bounds
  CHECK_NOTHROW(validate_class_shape(Composition({0, 3}), 2, 2));
  CHECK_THROWS_AS(validate_class_shape(Composition({0, 4}), 2, 2), PartTooLarge);
  CHECK_THROWS_AS(validate_class_shape(Composition({1, 1, 1}), 2, 3), PartTooLarge);
  CHECK_NOTHROW(validate_class_shape(Composition({1, 1, 0}), 2, 3));
  CHECK_THROWS_AS(validate_class_shape(Composition(), 0, 3), IndexOutOfRange);
}

TEST_CASE("product classes over the resolution") {
  CHECK(bott_samelson_class(Composition(), 2, 2, Theory::Cohomology) == Polynomial(1));
  CHECK(bott_samelson_class(Composition({1}), 1, 1, Theory::Cohomology) == coh_root(1, 1));
  CHECK(bott_samelson_class(Composition({1}), 1, 1, Theory::KTheory) == k_root(1, 1));
  // rows start at the antidiagonal: row i covers columns k+1-i .. k-i+lambda_i
  CHECK(bott_samelson_class(Composition({2, 1}), 2, 2, Theory::Cohomology) ==
        coh_root(1, 2) * coh_root(1, 3) * coh_root(2, 1));
  CHECK(bott_samelson_class(Composition({0, 2}), 2, 2, Theory::Cohomology) ==
        coh_root(2, 1) * coh_root(2, 2));
  CHECK(pushforward_twist(2, Theory::Cohomology) == coh_root(1, 1));
  CHECK(pushforward_twist(3, Theory::Cohomology) ==
        coh_root(1, 1) * coh_root(1, 2) * coh_root(2, 1));
  CHECK(pushforward_twist(1, Theory::KTheory) == Polynomial(1));
}

TEST_CASE("factorial schur fixed values") {
  CHECK(factorial_schur(Composition(), 2, 2) == Polynomial(1));
  CHECK(factorial_schur(Composition({1}), 1, 1) == coh_root(1, 1));
  CHECK(factorial_schur(Composition({1}), 2, 2) == xp(1) + xp(2) + tp(1) + tp(2));
  CHECK(factorial_schur(Composition({1, 1}), 2, 2) == coh_root(1, 1) * coh_root(2, 1));
}

TEST_CASE("torus-free specialization is the classical schur polynomial") {
  auto drop_torus = [](Polynomial p, int torus_indices) {
    for (int j = 1; j <= torus_indices; ++j) p = substitute(p, tv(j), Polynomial());
    return p;
  };
  CHECK(drop_torus(factorial_schur(Composition({2}), 2, 2), 3) ==
        Polynomial::variable(xv(1), 2) + xp(1) * xp(2) + Polynomial::variable(xv(2), 2));
  CHECK(drop_torus(factorial_schur(Composition({1, 1}), 2, 2), 3) == xp(1) * xp(2));
  CHECK(drop_torus(factorial_schur(Composition({2, 1}), 2, 2), 3) ==
        xp(1) * xp(2) * (xp(1) + xp(2)));
}

TEST_CASE("determinant straightens compositions by itself") {
  CHECK(factorial_schur(Composition({0, 2}), 2, 2) == -factorial_schur(Composition({1, 1}), 2, 2));
  CHECK(factorial_schur(Composition({1, 2}), 2, 2) == Polynomial());
  CHECK(factorial_schur(Composition({0, 3}), 2, 2) == -factorial_schur(Composition({2, 1}), 2, 2));
  for (const Composition& c : all_compositions(3, 2)) {
    CHECK(factorial_schur(c, 3, 2) == straightened_schur(c, 3, 2).value);
  }
}

TEST_CASE("pushforward example values") {
  // the two shapes every discussion of the twist starts from
  CHECK(pushforward_class(Composition({1, 2}), 2, 3, Theory::Cohomology, Route::Operator).value ==
        Polynomial());
  CHECK(pushforward_class(Composition({0, 2}), 2, 3, Theory::Cohomology, Route::Operator).value ==
        -(coh_root(1, 1) * coh_root(2, 1)));
  CHECK_THROWS_AS(pushforward(xp(1), 2, Theory::Cohomology, Route::Determinant), Error);
}

TEST_CASE("three routes agree in cohomology") {
  const int ncap = 2;
  for (int k = 1; k <= 2; ++k) {
    for (const Composition& c : all_compositions(k, 2)) {
      Polynomial det = pushforward_class(c, k, ncap, Theory::Cohomology, Route::Determinant).value;
      Polynomial sym = pushforward_class(c, k, ncap, Theory::Cohomology, Route::Symmetrizer).value;
      Polynomial op = pushforward_class(c, k, ncap, Theory::Cohomology, Route::Operator).value;
      CHECK(det == sym);
      CHECK(det == op);
      CHECK(is_symmetric(det, k));
    }
  }
}

TEST_CASE("three routes agree in k-theory") {
  const int ncap = 2;
  for (int k = 1; k <= 2; ++k) {
    for (const Composition& c : all_compositions(k, 2)) {
      Polynomial det = pushforward_class(c, k, ncap, Theory::KTheory, Route::Determinant).value;
      Polynomial sym = pushforward_class(c, k, ncap, Theory::KTheory, Route::Symmetrizer).value;
      Polynomial op = pushforward_class(c, k, ncap, Theory::KTheory, Route::Operator).value;
      CHECK(det == sym);
      CHECK(det == op);
      CHECK(is_symmetric(det, k));
    }
  }
  // one k = 3 partition as a smoke check
  Composition c({2, 1, 0});
  CHECK(pushforward_class(c, 3, 2, Theory::KTheory, Route::Determinant).value ==
        pushforward_class(c, 3, 2, Theory::KTheory, Route::Operator).value);
}

TEST_CASE("grothendieck determinant fixed values") {
  CHECK(factorial_grothendieck(Composition(), 2, 2) == Polynomial(1));
  CHECK(factorial_grothendieck(Composition({1}), 1, 1) == k_root(1, 1));
  CHECK(factorial_grothendieck(Composition({2}), 1, 2) == k_root(1, 1) * k_root(1, 2));
}

TEST_CASE("k-theory straightening identity") {
  const int ncap = 2;
  for (const Composition& c : all_compositions(2, 2)) {
    CHECK(check_ktheory_straightening(c, 1, 2, ncap));
  }
  CHECK(check_ktheory_straightening(Composition({0, 2, 1}), 1, 3, 2));
  CHECK(check_ktheory_straightening(Composition({1, 0, 2}), 2, 3, 2));
  // weakly decreasing at i is vacuous
  CHECK(check_ktheory_straightening(Composition({2, 2}), 1, 2, ncap));
  CHECK_THROWS_AS(check_ktheory_straightening(Composition({0, 1}), 0, 2, ncap), IndexOutOfRange);
  CHECK_THROWS_AS(check_ktheory_straightening(Composition({0, 1}), 2, 2, ncap), IndexOutOfRange);
}

TEST_CASE("double grothendieck table") {
  // n = 2 in full
  CHECK(double_grothendieck(Permutation({2, 1})) == k_root(1, 1));
  CHECK(double_grothendieck(Permutation({1, 2})) == Polynomial(1));
  // n = 3 top class and two descents
  CHECK(double_grothendieck(Permutation({3, 2, 1})) ==
        k_root(1, 1) * k_root(1, 2) * k_root(2, 1));
  CHECK(double_grothendieck(Permutation({2, 3, 1})) == k_root(1, 1) * k_root(2, 1));
  CHECK(double_grothendieck(Permutation({2, 1, 3})) == k_root(1, 1));
  CHECK(double_grothendieck(Permutation({1, 2, 3})) == Polynomial(1));
  // memoized table serves repeated queries
  GrothendieckTable table(3);
  for (const Permutation& w : symmetric_group(3)) {
    CHECK(table.get(w) == double_grothendieck(w));
  }
  CHECK_THROWS_AS(table.get(Permutation({1, 2})), IndexOutOfRange);
}

TEST_CASE("grassmannian double grothendieck meets the determinant") {
  // descent at k only: the table value is the factorial determinant in x_1..x_k
  struct Case {
    std::vector<int> w;
    int k;
  };
  for (const Case& c : {Case{{2, 1, 3}, 1}, Case{{3, 1, 2}, 1}, Case{{1, 3, 2}, 2},
                        Case{{2, 3, 1}, 2}, Case{{1, 2, 4, 3}, 3}}) {
    Permutation w(c.w);
    REQUIRE(is_grassmannian(w, c.k));
    Partition lam = partition_from_grassmannian(w, c.k);
    int n = w.size();
    CHECK(double_grothendieck(w) ==
          factorial_grothendieck(Composition(lam.parts()), c.k, n - c.k));
  }
}
