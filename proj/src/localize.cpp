#include "schubert/localize.hpp"

#include "schubert/rng.hpp"

#include <set>

namespace schubert {

FixedPoint fixed_point(const Partition& lambda, int k, int ncap) {
  if (lambda.length() > k)
    throw PartTooLarge("fixed point: partition " + lambda.to_string() + " has more than k = " +
                       std::to_string(k) + " parts");
  if (lambda.part(1) > ncap)
    throw PartTooLarge("fixed point: part " + std::to_string(lambda.part(1)) + " exceeds n-cap = " +
                       std::to_string(ncap));
  return {lambda, k, ncap, fixed_point_indices(lambda, k)};
}

ResolutionFixedPoint resolution_fixed_point(const FixedPoint& p, const Permutation& w) {
  if (w.size() != p.k) throw IndexOutOfRange("resolution fixed point: |w| != k");
  // S_i subset of F_{N+i}: every chosen index among the first i stays in
  // [k+1-i, ncap+k]
  bool ok = true;
  for (int i = 1; i <= p.k && ok; ++i) {
    for (int j = 1; j <= i; ++j) {
      int idx = p.indices[w(j) - 1];
      if (idx < p.k + 1 - i || idx > p.ncap + p.k) {
        ok = false;
        break;
      }
    }
  }
  return {p, w, ok};
}

bool simple_exclusion(const Permutation& w, int k) {
  for (int i = 1; i <= k; ++i)
    if (w(i) < k + 1 - i) return true;
  return false;
}

Polynomial localize_cohomology(const Polynomial& f, const FixedPoint& p) {
  Polynomial g = f;
  for (int j = 1; j <= p.k; ++j) g = substitute(g, xv(j), -tp(p.indices[j - 1]));
  return g;
}

Polynomial localize_ktheory(const Polynomial& f, const FixedPoint& p) {
  Polynomial g = f;
  for (int j = 1; j <= p.k; ++j) g = substitute(g, xv(j), Polynomial(1) - ep(p.indices[j - 1]));
  // collect the K torus indices actually present
  std::set<int> tidx;
  for (const auto& [m, c] : g.terms())
    for (const auto& [v, e] : m.factors)
      if (v.family == Family::Tk) tidx.insert(v.index);
  for (int j : tidx) g = substitute(g, Tv(j), Polynomial(1) - ep(j, -1));
  return g;
}

std::pair<Polynomial, Polynomial> cohomology_weight(const FixedPoint& p, const Permutation& w) {
  Polynomial num(1), den(1);
  for (int i = 1; i <= p.k - 1; ++i) {
    for (int j = i + 1; j <= p.k; ++j) {
      num *= tp(j - i) - tp(p.indices[w(i) - 1]);
      den *= tp(p.indices[w(j) - 1]) - tp(p.indices[w(i) - 1]);
    }
  }
  return {std::move(num), std::move(den)};
}

std::pair<Polynomial, Polynomial> ktheory_weight(const FixedPoint& p, const Permutation& w) {
  Polynomial num(1), den(1);
  for (int i = 1; i <= p.k - 1; ++i) {
    for (int j = i + 1; j <= p.k; ++j) {
      num *= Polynomial(1) - Polynomial::term(Monomial::var(ev(p.indices[w(i) - 1])) *
                                                  Monomial::var(ev(j - i), -1),
                                              Int(1));
      den *= Polynomial(1) - Polynomial::term(Monomial::var(ev(p.indices[w(i) - 1])) *
                                                  Monomial::var(ev(p.indices[w(j) - 1]), -1),
                                              Int(1));
    }
  }
  return {std::move(num), std::move(den)};
}

VerifyReport verify_localized_pushforward(const Polynomial& f, const Partition& lambda, int k,
                                          int ncap, Theory th, int trials, std::uint64_t seed) {
  const FixedPoint p = fixed_point(lambda, k, ncap);
  const bool coh = th == Theory::Cohomology;
  const Family torus = coh ? Family::Tc : Family::E;

  Polynomial g = pushforward(f, k, th, Route::Operator);
  Polynomial gl = coh ? localize_cohomology(g, p) : localize_ktheory(g, p);

  struct Point {
    Permutation w;
    Polynomial num, den;
  };
  std::vector<Point> points;
  for (const Permutation& w : symmetric_group(k)) {
    auto [num, den] = coh ? cohomology_weight(p, w) : ktheory_weight(p, w);
    points.push_back({w, std::move(num), std::move(den)});
  }

  Rng rng(seed);
  const int total = ncap + k;
  VerifyReport rep{true, trials, seed, ""};

  for (int trial = 0; trial < trials; ++trial) {
    // distinct torus values; distinctness keeps every weight denominator
    // away from zero
    std::vector<Rat> val(total + 1);
    int redraws = 0;
    for (;;) {
      std::set<Rat> seen;
      bool distinct = true;
      for (int m = 1; m <= total; ++m) {
        Rat v = coh ? Rat(rng.range(-1000000, 1000000))
                    : Rat(rng.range(1, 10000)) / rng.range(1, 60);
        if (!seen.insert(v).second) {
          distinct = false;
          break;
        }
        val[m] = v;
      }
      if (distinct) break;
      if (++redraws > 32)
        throw DegenerateSpecialization("verify: could not draw distinct torus values");
    }

    std::map<VarId, Rat> tpoint;
    for (int m = 1; m <= total; ++m) tpoint[{torus, m}] = val[m];

    const Rat lhs = evaluate(gl, tpoint);
    Rat rhs(0);
    for (const Point& pt : points) {
      const Rat num = evaluate(pt.num, tpoint);
      if (num == 0) continue;
      const Rat den = evaluate(pt.den, tpoint);
      if (den == 0) throw DegenerateSpecialization("verify: weight denominator vanished");
      std::map<VarId, Rat> fpoint = tpoint;
      for (int j = 1; j <= k; ++j) {
        const Rat& e = val[p.indices[pt.w(j) - 1]];
        fpoint[xv(j)] = coh ? -e : Rat(1) - e;
      }
      if (!coh)
        for (int m = 1; m <= total; ++m) fpoint[Tv(m)] = Rat(1) - Rat(1) / val[m];
      rhs += num / den * evaluate(f, fpoint);
    }

    if (lhs != rhs) {
      rep.ok = false;
      rep.detail = "trial " + std::to_string(trial) + " of " + std::to_string(trials) +
                   " disagrees at lambda = " + lambda.to_string();
      break;
    }
  }
  return rep;
}

}  // namespace schubert
