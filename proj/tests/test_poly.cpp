#include "schubert/poly.hpp"

#include "schubert/poly_io.hpp"
#include "schubert/rng.hpp"

#include <doctest.h>

using namespace schubert;

static Polynomial random_mixed(Rng& rng) {
  return random_polynomial(rng, 3, 2, Family::Tc, 4, 5, 9);
}

TEST_CASE("canonical order drives the text printer") {
  CHECK(to_text(Polynomial()) == "0");
  CHECK(to_text(Polynomial(1)) == "1");
  CHECK(to_text(Polynomial(-7)) == "-7");
  CHECK(to_text(xp(1) + tp(1)) == "x1 + t1");
  CHECK(to_text(xp(1) + xp(2) + tp(1) + tp(2)) == "x1 + x2 + t1 + t2");
  CHECK(to_text((xp(1) + tp(1)) * (xp(1) + tp(2))) == "x1^2 + x1*t1 + x1*t2 + t1*t2");
  // ascending degree puts the quadratic term last
  CHECK(to_text(xp(1) + Tp(1) - xp(1) * Tp(1)) == "x1 + T1 - x1*T1");
  CHECK(to_text(Polynomial(2) * xp(1) - tp(2)) == "2*x1 - t2");
  CHECK(to_text(ep(1, -1) + Polynomial(1) + ep(1)) == "E1^-1 + 1 + E1");
}

TEST_CASE("negative coefficient leads the line") {
  CHECK(to_text(-xp(1) - tp(1)) == "-x1 - t1");
}

TEST_CASE("same-degree ties order by the first differing variable") {
  // x2 before t1 (family order), x1^2 before x1*t1 (larger exponent first)
  Polynomial p = tp(1) + xp(2);
  CHECK(to_text(p) == "x2 + t1");
  Polynomial q = Polynomial::variable(xv(1), 2) + xp(1) * tp(1);
  CHECK(to_text(q) == "x1^2 + x1*t1");
}

TEST_CASE("laurent monomials cancel") {
  CHECK(ep(1) * ep(1, -1) == Polynomial(1));
  CHECK((ep(2, -3) * ep(2, 3)) == Polynomial(1));
  Polynomial p = ep(1, -2) * ep(1);
  CHECK(p == ep(1, -1));
  CHECK(p.degree() == 0);  // max over terms; only term has degree -1 -> degree() clamps at 0
}

TEST_CASE("arithmetic laws on random inputs") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_mixed(rng);
    Polynomial b = random_mixed(rng);
    Polynomial c = random_mixed(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial());
    CHECK(a + Polynomial() == a);
    CHECK(a * Polynomial(1) == a);
    CHECK(a * Polynomial() == Polynomial());
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("substitute replaces a single variable") {
  Polynomial p = (xp(1) + tp(1)) * (xp(1) + tp(2));
  CHECK(substitute(p, xv(1), -tp(1)) == Polynomial());
  CHECK(substitute(p, tv(1), tp(2)) == (xp(1) + tp(2)) * (xp(1) + tp(2)));
  CHECK(substitute(p, tv(3), xp(2)) == p);  // absent variable: no change
  // constant replacement
  CHECK(substitute(xp(1) * xp(2), xv(2), Polynomial(1)) == xp(1));
}

TEST_CASE("substitute through negative exponents needs an invertible monomial") {
  Polynomial p = ep(1, -1) + Tp(1);
  CHECK(substitute(p, ev(1), -ep(2, 2)) == -ep(2, -2) + Tp(1));
  CHECK_THROWS_AS(substitute(p, ev(1), xp(1)), NegativeExponentSubstitution);
  CHECK_THROWS_AS(substitute(p, ev(1), ep(2) + Polynomial(1)), NegativeExponentSubstitution);
  CHECK_THROWS_AS(substitute(p, ev(1), Polynomial(2) * ep(2)), NegativeExponentSubstitution);
  // positive occurrences only: any replacement is fine
  CHECK(substitute(ep(1, 2), ev(1), xp(1) + Polynomial(1)) ==
        (xp(1) + Polynomial(1)) * (xp(1) + Polynomial(1)));
}

TEST_CASE("evaluate is exact rational arithmetic") {
  Polynomial p = Polynomial::variable(xv(1), 2) - tp(1);
  std::map<VarId, Rat> pt{{xv(1), Rat(3) / 2}, {tv(1), Rat(1) / 4}};
  CHECK(evaluate(p, pt) == Rat(2));
  CHECK_THROWS_AS(evaluate(p, {{xv(1), Rat(1)}}), MissingAssignment);
  std::map<VarId, Rat> zero{{ev(1), Rat(0)}};
  CHECK_THROWS_AS(evaluate(ep(1, -1), zero), ZeroAtLaurentPole);
  std::map<VarId, Rat> good{{ev(1), Rat(2) / 3}};
  CHECK(evaluate(ep(1, -2), good) == Rat(9) / 4);
}

TEST_CASE("permute_x acts on the x family only") {
  Polynomial p = xp(1) * tp(1) + xp(2);
  CHECK(permute_x(p, {2, 1}) == xp(2) * tp(1) + xp(1));
  CHECK(permute_x(permute_x(p, {2, 1}), {2, 1}) == p);
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = random_mixed(rng);
    // action is a homomorphism: relabel by v then by u equals relabel by u∘v
    std::vector<int> u{2, 3, 1}, v{3, 1, 2}, uv(3);
    for (int i = 0; i < 3; ++i) uv[i] = u[v[i] - 1];
    CHECK(permute_x(permute_x(f, v), u) == permute_x(f, uv));
  }
}

TEST_CASE("exact linear division") {
  Polynomial p = (xp(1) + tp(1)) * (xp(1) + tp(2)) - (xp(2) + tp(1)) * (xp(2) + tp(2));
  CHECK(exact_divide_linear(p, 1, 2) == xp(1) + xp(2) + tp(1) + tp(2));
  CHECK_THROWS_AS(exact_divide_linear(xp(1) + xp(2), 1, 2), NotDivisible);
  CHECK_THROWS_AS(exact_divide_linear(xp(1) * xp(2), 1, 2), NotDivisible);
  CHECK_THROWS_AS(exact_divide_linear(tp(1), 1, 2), NotDivisible);
  Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial q = random_mixed(rng);
    CHECK(exact_divide_linear(q * (xp(1) - xp(3)), 1, 3) == q);
  }
}

TEST_CASE("vandermonde division inverts multiplication") {
  Rng rng(5);
  Polynomial vand(1);
  for (int a = 1; a < 3; ++a)
    for (int b = a + 1; b <= 3; ++b) vand *= xp(a) - xp(b);
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial q = random_mixed(rng);
    CHECK(divide_vandermonde(q * vand, 3) == q);
  }
  CHECK(divide_vandermonde(Polynomial(), 3) == Polynomial());
}

TEST_CASE("symmetry detection") {
  CHECK(is_symmetric(xp(1) + xp(2) + xp(3), 3));
  CHECK(is_symmetric(xp(1) * xp(2) * xp(3), 3));
  CHECK(!is_symmetric(xp(1) + xp(2), 3));
  CHECK(is_symmetric(xp(1) + xp(2), 2));
  CHECK(is_symmetric(Polynomial(4), 5));
}

TEST_CASE("json round trip and frozen bytes") {
  Polynomial p = xp(1) + Tp(1) - xp(1) * Tp(1);
  CHECK(poly_json(p).dump() ==
        R"([{"coeff":"1","vars":[{"exp":1,"family":"x","index":1}]},)"
        R"({"coeff":"1","vars":[{"exp":1,"family":"T","index":1}]},)"
        R"({"coeff":"-1","vars":[{"exp":1,"family":"x","index":1},{"exp":1,"family":"T","index":1}]}])");
  CHECK(poly_from_json(poly_json(p)) == p);
  CHECK(poly_from_json(poly_json(Polynomial())) == Polynomial());

  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial f = random_mixed(rng) + ep(1, -2) * ep(3, 1) - ep(2);
    CHECK(poly_from_json(poly_json(f)) == f);
  }
}

TEST_CASE("json parser rejects malformed input") {
  CHECK_THROWS_AS(poly_from_json(nlohmann::json::object()), Error);
  CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"([{"coeff":"1"}])")), Error);
  CHECK_THROWS_AS(
      poly_from_json(nlohmann::json::parse(
          R"([{"coeff":"1","vars":[{"exp":0,"family":"x","index":1}]}])")),
      Error);
  CHECK_THROWS_AS(
      poly_from_json(nlohmann::json::parse(
          R"([{"coeff":"1","vars":[{"exp":-1,"family":"x","index":1}]}])")),
      Error);
  CHECK_THROWS_AS(
      poly_from_json(nlohmann::json::parse(
          R"([{"coeff":"1","vars":[{"exp":1,"family":"q","index":1}]}])")),
      Error);
}

TEST_CASE("latex rendering") {
  CHECK(to_latex(xp(1) + tp(1)) == "x_1 + t_1");
  CHECK(to_latex(Polynomial::variable(xv(1), 2)) == "x_1^{2}");
  CHECK(to_latex(Polynomial(2) * xp(1) * Tp(10)) == "2 x_1 T_{10}");
  CHECK(to_latex(ep(1, -1)) == "e^{-t_1}");
  CHECK(to_latex(ep(2, 3)) == "e^{3 t_2}");
  CHECK(to_latex(Polynomial()) == "0");
}
