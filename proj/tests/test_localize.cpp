#include "schubert/localize.hpp"

#include <doctest.h>

using namespace schubert;

TEST_CASE("fixed points of the grassmannian") {
  FixedPoint p = fixed_point(Partition({2, 1}), 2, 2);
  CHECK(p.indices == std::vector<int>{2, 4});
  CHECK(fixed_point(Partition(), 3, 1).indices == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(fixed_point(Partition({3}), 2, 2), PartTooLarge);
  CHECK_THROWS_AS(fixed_point(Partition({1, 1, 1}), 2, 2), PartTooLarge);
}

TEST_CASE("restriction in cohomology") {
  // s_(1) for k = 2 restricted to e_(1) and to the base point
  Polynomial s1 = factorial_schur(Composition({1}), 2, 2);
  CHECK(localize_cohomology(s1, fixed_point(Partition({1}), 2, 2)) == tp(2) - tp(3));
  CHECK(localize_cohomology(s1, fixed_point(Partition(), 2, 2)) == Polynomial());
  // restriction of the top class to its own point: product of the box weights
  Polynomial s11 = factorial_schur(Composition({1, 1}), 2, 2);
  CHECK(localize_cohomology(s11, fixed_point(Partition({1, 1}), 2, 2)) ==
        (tp(1) - tp(2)) * (tp(1) - tp(3)));
}

TEST_CASE("restriction in k-theory") {
  Polynomial g1 = factorial_grothendieck(Composition({1}), 1, 1);
  CHECK(localize_ktheory(g1, fixed_point(Partition({1}), 1, 1)) ==
        Polynomial(1) - ep(1, -1) * ep(2));
  CHECK(localize_ktheory(g1, fixed_point(Partition(), 1, 1)) == Polynomial());
}

TEST_CASE("restriction vanishes exactly outside the containment order") {
  const int k = 2, ncap = 2;
  for (const Partition& lam : partitions_in_box(k, ncap)) {
    Polynomial coh = factorial_schur(Composition(lam.parts()), k, ncap);
    Polynomial kth = factorial_grothendieck(Composition(lam.parts()), k, ncap);
    for (const Partition& mu : partitions_in_box(k, ncap)) {
      FixedPoint p = fixed_point(mu, k, ncap);
      CHECK(localize_cohomology(coh, p).is_zero() == !contains(mu, lam));
      CHECK(localize_ktheory(kth, p).is_zero() == !contains(mu, lam));
    }
  }
}

TEST_CASE("admissibility matches the weight numerator") {
  for (int k = 2; k <= 3; ++k) {
    for (const Partition& lam : partitions_in_box(k, 2)) {
      FixedPoint p = fixed_point(lam, k, 2);
      for (const Permutation& w : symmetric_group(k)) {
        ResolutionFixedPoint r = resolution_fixed_point(p, w);
        CHECK(r.admissible == !cohomology_weight(p, w).first.is_zero());
        CHECK(r.admissible == !ktheory_weight(p, w).first.is_zero());
      }
    }
  }
}

TEST_CASE("the identity-label point over the base point is not admissible") {
  FixedPoint base = fixed_point(Partition(), 2, 2);
  CHECK(!resolution_fixed_point(base, Permutation::identity(2)).admissible);
  CHECK(resolution_fixed_point(base, Permutation({2, 1})).admissible);
  CHECK_THROWS_AS(resolution_fixed_point(base, Permutation::identity(3)), IndexOutOfRange);
}

TEST_CASE("coordinate exclusion test differs from the index test on some shapes") {
  // w = id is excluded by the coordinate test but its weight at e_(1,1) is
  // nonzero; the index test keeps it
  FixedPoint p = fixed_point(Partition({1, 1}), 2, 2);
  Permutation id2 = Permutation::identity(2);
  CHECK(simple_exclusion(id2, 2));
  CHECK(resolution_fixed_point(p, id2).admissible);
  CHECK(cohomology_weight(p, id2).first == tp(1) - tp(2));
  CHECK(cohomology_weight(p, id2).second == tp(3) - tp(2));
}

TEST_CASE("weight values at a small point") {
  FixedPoint p = fixed_point(Partition({1, 1}), 2, 2);
  auto [num, den] = cohomology_weight(p, Permutation({2, 1}));
  CHECK(num == tp(1) - tp(3));
  CHECK(den == tp(2) - tp(3));
  auto [knum, kden] = ktheory_weight(fixed_point(Partition(), 2, 2), Permutation::identity(2));
  CHECK(knum.is_zero());
  CHECK(kden == Polynomial(1) - ep(1) * ep(2, -1));
}

TEST_CASE("localized pushforward against the weighted fixed point sum") {
  for (Theory th : {Theory::Cohomology, Theory::KTheory}) {
    for (const Partition& lam : partitions_in_box(2, 2)) {
      Polynomial f = bott_samelson_class(Composition(lam.parts()), 2, 2, th);
      VerifyReport rep = verify_localized_pushforward(f, lam, 2, 2, th, 3, 424242);
      CHECK(rep.ok);
      CHECK(rep.trials == 3);
      CHECK(rep.seed == 424242);
      CHECK(rep.detail.empty());
    }
  }
  // one k = 3 case per theory
  Partition lam({1, 1});
  for (Theory th : {Theory::Cohomology, Theory::KTheory}) {
    Polynomial f = bott_samelson_class(Composition(lam.parts()), 3, 1, th);
    CHECK(verify_localized_pushforward(f, lam, 3, 1, th, 2, 7).ok);
  }
}
