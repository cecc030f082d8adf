#include "cli.hpp"

#include "schubert/classes.hpp"
#include "schubert/localize.hpp"
#include "schubert/parallel.hpp"
#include "schubert/poly_io.hpp"
#include "schubert/rng.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace schubert_cli {

using namespace schubert;
using nlohmann::json;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw Error("cannot parse \"" + tok + "\" in \"" + s + "\"");
    }
    if (pos != tok.size()) throw Error("cannot parse \"" + tok + "\" in \"" + s + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw Error("empty integer list");
  return out;
}

Composition composition_arg(const std::string& s) { return Composition(parse_int_list(s)); }

Partition partition_arg(const std::string& s) {
  Composition c = composition_arg(s);
  if (!c.is_partition())
    throw Error("\"" + s + "\" is not a partition (parts must be weakly decreasing)");
  return c.to_partition();
}

Theory theory_arg(const std::string& s) {
  if (s == "coh") return Theory::Cohomology;
  if (s == "k") return Theory::KTheory;
  throw Error("theory must be \"coh\" or \"k\", got \"" + s + "\"");
}

Route route_arg(const std::string& s) {
  if (s == "det") return Route::Determinant;
  if (s == "sym") return Route::Symmetrizer;
  if (s == "op") return Route::Operator;
  throw Error("route must be det, sym, op or all, got \"" + s + "\"");
}

std::string render(const Polynomial& p, const std::string& fmt) {
  if (fmt == "latex") return to_latex(p);
  if (fmt == "json") return poly_json(p).dump();
  return to_text(p);
}

int default_ncap(const Composition& lam) {
  int m = 1;
  for (int v : lam.parts()) m = std::max(m, v);
  return m;
}

struct Flags {
  int k = 2;
  int ncap = -1;  // resolved per command when negative
  std::string lam;
  std::string mu;
  std::string perm;
  std::string theory = "coh";
  std::string route;
  std::string format = "text";
  std::uint64_t seed = 12345;
  int trials = 5;
  std::string suite;
};

void add_shape_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--k", f.k, "number of rows / rank of the subbundle");
  cmd->add_option("--n-cap", f.ncap, "maximal column count (Grassmannian of k in k + n-cap)");
  cmd->add_option("--format", f.format, "text, latex or json")
      ->check(CLI::IsMember({"text", "latex", "json"}));
}

// three-route comparison used by schur/groth/push with --route all
int emit_all_routes(const Composition& lam, int k, int ncap, Theory th, const std::string& fmt,
                    std::ostream& out) {
  const Route routes[] = {Route::Determinant, Route::Symmetrizer, Route::Operator};
  std::vector<Polynomial> values;
  for (Route r : routes) values.push_back(pushforward_class(lam, k, ncap, th, r).value);
  const bool match = values[0] == values[1] && values[1] == values[2];
  if (fmt == "json") {
    json j;
    j["routes"] = {{"det", poly_json(values[0])},
                   {"sym", poly_json(values[1])},
                   {"op", poly_json(values[2])}};
    j["match"] = match;
    out << j.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < 3; ++i)
      out << route_name(routes[i]) << ": "
          << (fmt == "latex" ? to_latex(values[i]) : to_text(values[i])) << "\n";
    out << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_class(const Flags& f, Theory th, std::ostream& out) {
  Partition lam = partition_arg(f.lam);
  Composition clam(lam.parts());
  int ncap = f.ncap >= 0 ? f.ncap : default_ncap(clam);
  std::string route = f.route.empty() ? "det" : f.route;
  if (route == "all") return emit_all_routes(clam, f.k, ncap, th, f.format, out);
  Polynomial v = pushforward_class(clam, f.k, ncap, th, route_arg(route)).value;
  out << render(v, f.format) << "\n";
  return 0;
}

int cmd_push(const Flags& f, std::ostream& out) {
  Composition lam = composition_arg(f.lam);
  Theory th = theory_arg(f.theory);
  int ncap = f.ncap >= 0 ? f.ncap : default_ncap(lam);
  std::string route = f.route.empty() ? "op" : f.route;
  if (route == "all") return emit_all_routes(lam, f.k, ncap, th, f.format, out);
  Polynomial v = pushforward_class(lam, f.k, ncap, th, route_arg(route)).value;
  out << render(v, f.format) << "\n";
  return 0;
}

int cmd_straighten(const Flags& f, std::ostream& out) {
  Composition lam = composition_arg(f.lam);
  Theory th = theory_arg(f.theory);
  int ncap = f.ncap >= 0 ? f.ncap : default_ncap(lam);

  if (th == Theory::Cohomology) {
    StraightenOutcome o = straighten_composition(lam, f.k);
    Polynomial value = straightened_schur(lam, f.k, ncap).value;
    if (f.format == "json") {
      json j;
      j["mu"] = lam.parts();
      if (o.kind == StraightenOutcome::Kind::Zero) {
        j["kind"] = "zero";
      } else {
        j["kind"] = "signed";
        j["sign"] = o.sign;
        j["partition"] = o.partition.parts();
        j["witness"] = o.witness.oneline();
      }
      j["value"] = poly_json(value);
      out << j.dump() << "\n";
    } else {
      out << "mu: " << lam.to_string() << "\n";
      if (o.kind == StraightenOutcome::Kind::Zero) {
        out << "kind: zero\n";
      } else {
        out << "kind: signed\n";
        out << "sign: " << o.sign << "\n";
        out << "partition: " << o.partition.to_string() << "\n";
        out << "witness: " << o.witness.to_string() << "\n";
      }
      out << "value: " << (f.format == "latex" ? to_latex(value) : to_text(value)) << "\n";
    }
    return 0;
  }

  // K-theory: check the exchange identity at every position
  bool all_ok = true;
  json positions = json::array();
  std::ostringstream text;
  for (int i = 1; i <= f.k - 1; ++i) {
    bool ok = check_ktheory_straightening(lam, i, f.k, ncap);
    all_ok = all_ok && ok;
    positions.push_back({{"i", i}, {"ok", ok}});
    text << "i=" << i << ": " << (ok ? "ok" : "FAIL") << "\n";
  }
  if (f.format == "json") {
    json j;
    j["lam"] = lam.parts();
    j["positions"] = positions;
    j["ok"] = all_ok;
    out << j.dump() << "\n";
  } else {
    out << text.str();
    out << (all_ok ? "MATCH" : "MISMATCH") << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_dgroth(const Flags& f, std::ostream& out) {
  Permutation w(parse_int_list(f.perm));
  out << render(double_grothendieck(w), f.format) << "\n";
  return 0;
}

int cmd_localize(const Flags& f, std::ostream& out) {
  Partition lam = partition_arg(f.lam);
  Partition mu = partition_arg(f.mu);
  Theory th = theory_arg(f.theory);
  int ncap = f.ncap;
  if (ncap < 0) ncap = std::max(default_ncap(Composition(lam.parts())),
                                default_ncap(Composition(mu.parts())));
  FixedPoint p = fixed_point(mu, f.k, ncap);
  Composition clam(lam.parts());
  Polynomial cls = th == Theory::Cohomology ? factorial_schur(clam, f.k, ncap)
                                            : factorial_grothendieck(clam, f.k, ncap);
  Polynomial v = th == Theory::Cohomology ? localize_cohomology(cls, p) : localize_ktheory(cls, p);
  out << render(v, f.format) << "\n";
  return 0;
}

// ----------------------------------------------------------------------
// verify suites

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string note;
};

using CaseFn = std::function<bool(std::size_t)>;

// runs all cases under the configured thread count, reports the first failure
SuiteResult run_cases(const std::string& name, std::size_t n, const CaseFn& fn,
                      const std::function<std::string(std::size_t)>& describe) {
  std::vector<char> ok(n, 1);
  parallel_for(n, [&](std::size_t i) { ok[i] = fn(i) ? 1 : 0; });
  SuiteResult r{name, static_cast<long>(n), 0, ""};
  for (std::size_t i = 0; i < n; ++i) {
    if (!ok[i]) {
      if (r.failures == 0) r.note = "first failure: " + describe(i);
      ++r.failures;
    }
  }
  return r;
}

SuiteResult suite_operators(int k, std::uint64_t seed, int trials) {
  if (k < 2) return {"operators", 0, 0, "needs k >= 2"};
  Rng rng(seed);
  long cases = 0, failures = 0;
  std::string note;
  auto fail = [&](const std::string& what) {
    if (failures == 0) note = "first failure: " + what;
    ++failures;
  };

  std::vector<Permutation> group;
  if (k <= 4) group = symmetric_group(k);

  for (int t = 0; t < trials; ++t) {
    Polynomial f = random_polynomial(rng, k, k, Family::Tc, 4, 5, 9);
    Polynomial g = random_polynomial(rng, k, k, Family::Tc, 3, 4, 9);
    for (int i = 1; i <= k - 1; ++i) {
      ++cases;
      Polynomial df = divided_difference(f, i, k);
      Polynomial pf = demazure(f, i, k);
      if (!divided_difference(df, i, k).is_zero()) fail("dd twice is not zero");
      if (demazure(pf, i, k) != pf) fail("demazure is not idempotent");
      if (pf != f + (Polynomial(1) - xp(i)) * df) fail("demazure vs dd identity");
      Polynomial si_g = permute_x(g, Permutation::adjacent_transposition(k, i));
      if (divided_difference(f * g, i, k) != f * divided_difference(g, i, k) + si_g * df)
        fail("Leibniz rule");
      if (si_g == g && divided_difference(f * g, i, k) != g * df)
        fail("symmetric factor rule");
    }
    for (int i = 1; i + 1 <= k - 1; ++i) {
      ++cases;
      auto braid = [&](auto op) {
        Polynomial lhs = op(op(op(f, i + 1), i), i + 1);
        Polynomial rhs = op(op(op(f, i), i + 1), i);
        return lhs == rhs;
      };
      if (!braid([&](const Polynomial& h, int j) { return divided_difference(h, j, k); }))
        fail("dd braid relation");
      if (!braid([&](const Polynomial& h, int j) { return demazure(h, j, k); }))
        fail("demazure braid relation");
    }
    for (int i = 1; i <= k - 1; ++i) {
      for (int j = i + 2; j <= k - 1; ++j) {
        ++cases;
        if (divided_difference(divided_difference(f, i, k), j, k) !=
            divided_difference(divided_difference(f, j, k), i, k))
          fail("dd commutation");
        if (demazure(demazure(f, i, k), j, k) != demazure(demazure(f, j, k), i, k))
          fail("demazure commutation");
      }
    }
    // every reduced word gives the same operator
    for (const Permutation& w : group) {
      ++cases;
      auto words = all_reduced_words(w);
      for (OperatorKind kind : {OperatorKind::DividedDifference, OperatorKind::Demazure}) {
        Polynomial ref = apply_word(f, words[0], k, kind);
        for (std::size_t wi = 1; wi < words.size(); ++wi) {
          if (apply_word(f, words[wi], k, kind) != ref) {
            fail("word dependence at " + w.to_string());
            break;
          }
        }
      }
    }
  }
  return {"operators", cases, failures, note};
}

SuiteResult suite_jacobi(int k, std::uint64_t seed, int trials) {
  Rng rng(seed);
  long cases = 0, failures = 0;
  std::string note;
  for (int t = 0; t < trials; ++t) {
    Polynomial f = random_polynomial(rng, k, k, Family::Tc, 4, 5, 9);
    Permutation w0 = Permutation::longest_element(k);
    for (OperatorKind kind : {OperatorKind::DividedDifference, OperatorKind::Demazure}) {
      ++cases;
      if (jacobi_symmetrize(f, k, kind) != apply_permutation_operator(f, w0, kind)) {
        if (failures == 0) note = "first failure: trial " + std::to_string(t);
        ++failures;
      }
    }
  }
  return {"jacobi", cases, failures, note};
}

SuiteResult suite_routes(int k, int ncap, Theory th) {
  const int pmax = std::min(3, ncap);
  struct Case {
    Composition c;
    int kk;
  };
  std::vector<Case> cases;
  for (int kk = 1; kk <= k; ++kk)
    for (const Composition& c : all_compositions(kk, pmax)) {
      if (th == Theory::KTheory && !c.is_partition()) continue;
      cases.push_back({c, kk});
    }
  auto check = [&](std::size_t i) {
    const auto& [c, kk] = cases[i];
    Polynomial det = pushforward_class(c, kk, ncap, th, Route::Determinant).value;
    Polynomial sym = pushforward_class(c, kk, ncap, th, Route::Symmetrizer).value;
    Polynomial op = pushforward_class(c, kk, ncap, th, Route::Operator).value;
    return det == sym && sym == op;
  };
  auto describe = [&](std::size_t i) {
    return "shape " + cases[i].c.to_string() + " at k=" + std::to_string(cases[i].kk);
  };
  return run_cases(th == Theory::Cohomology ? "routes-coh" : "routes-k", cases.size(), check,
                   describe);
}

SuiteResult suite_straighten_k(int k, int ncap) {
  const int pmax = std::min(3, ncap);
  struct Case {
    Composition c;
    int kk, i;
  };
  std::vector<Case> cases;
  for (int kk = 2; kk <= k; ++kk)
    for (const Composition& c : all_compositions(kk, pmax))
      for (int i = 1; i <= kk - 1; ++i) cases.push_back({c, kk, i});
  auto check = [&](std::size_t i) {
    return check_ktheory_straightening(cases[i].c, cases[i].i, cases[i].kk, ncap);
  };
  auto describe = [&](std::size_t i) {
    return "shape " + cases[i].c.to_string() + " at k=" + std::to_string(cases[i].kk) +
           ", i=" + std::to_string(cases[i].i);
  };
  return run_cases("straighten-k", cases.size(), check, describe);
}

SuiteResult suite_dgroth(int k, int ncap) {
  const int nmax = std::min(k + ncap, 4);
  long cases = 0, failures = 0;
  std::string note;
  auto fail = [&](const std::string& what) {
    if (failures == 0) note = "first failure: " + what;
    ++failures;
  };
  for (int n = 1; n <= nmax; ++n) {
    GrothendieckTable table(n);
    for (const Permutation& w : symmetric_group(n)) {
      ++cases;
      const Polynomial& gw = table.get(w);  // recursion reaches every w
      for (int kk = 1; kk <= n - 1; ++kk) {
        if (!is_grassmannian(w, kk)) continue;
        // a k-Grassmannian class must not involve x beyond position kk
        bool independent = true;
        for (const auto& [m, c] : gw.terms())
          for (const auto& [v, e] : m.factors)
            if (v.family == Family::X && v.index > kk) independent = false;
        if (!independent) {
          fail("x-dependence beyond k=" + std::to_string(kk) + " at w=" + w.to_string());
          continue;
        }
        Partition lam = partition_from_grassmannian(w, kk);
        Polynomial det = factorial_grothendieck(Composition(lam.parts()), kk, n - kk);
        if (gw != det) fail("determinant mismatch at w=" + w.to_string());
      }
    }
  }
  return {"dgroth", cases, failures, note};
}

SuiteResult suite_vanishing(int k, int ncap) {
  const int pmax = std::min(3, ncap);
  struct Case {
    Partition lam, mu;
    int kk;
    Theory th;
  };
  std::vector<Case> cases;
  for (int kk = 1; kk <= k; ++kk) {
    auto box = partitions_in_box(kk, pmax);
    for (const Partition& lam : box)
      for (const Partition& mu : box)
        for (Theory th : {Theory::Cohomology, Theory::KTheory}) cases.push_back({lam, mu, kk, th});
  }
  auto check = [&](std::size_t i) {
    const Case& c = cases[i];
    Composition clam(c.lam.parts());
    FixedPoint p = fixed_point(c.mu, c.kk, ncap);
    Polynomial loc =
        c.th == Theory::Cohomology
            ? localize_cohomology(factorial_schur(clam, c.kk, ncap), p)
            : localize_ktheory(factorial_grothendieck(clam, c.kk, ncap), p);
    return loc.is_zero() == !contains(c.mu, c.lam);
  };
  auto describe = [&](std::size_t i) {
    return std::string(theory_name(cases[i].th)) + " class " + cases[i].lam.to_string() +
           " at point " + cases[i].mu.to_string() + ", k=" + std::to_string(cases[i].kk);
  };
  return run_cases("vanishing", cases.size(), check, describe);
}

SuiteResult suite_localization(int k, int ncap, std::uint64_t seed, int trials) {
  const int pmax = std::min(2, ncap);
  struct Case {
    Partition lam;
    int kk;
    Theory th;
  };
  std::vector<Case> cases;
  for (int kk = 1; kk <= k; ++kk)
    for (const Partition& lam : partitions_in_box(kk, pmax))
      for (Theory th : {Theory::Cohomology, Theory::KTheory}) cases.push_back({lam, kk, th});
  auto check = [&](std::size_t i) {
    const Case& c = cases[i];
    Polynomial f = bott_samelson_class(Composition(c.lam.parts()), c.kk, ncap, c.th);
    VerifyReport rep =
        verify_localized_pushforward(f, c.lam, c.kk, ncap, c.th, trials, seed + i);
    return rep.ok;
  };
  auto describe = [&](std::size_t i) {
    return std::string(theory_name(cases[i].th)) + " shape " + cases[i].lam.to_string() +
           ", k=" + std::to_string(cases[i].kk) + ", seed=" + std::to_string(seed + i);
  };
  SuiteResult r = run_cases("localize", cases.size(), check, describe);

  // weight-vanishing versus admissibility, plus the count of shapes where the
  // lambda-independent exclusion test disagrees with the index-based one
  long disagreements = 0;
  for (int kk = 1; kk <= k; ++kk) {
    for (const Partition& lam : partitions_in_box(kk, ncap)) {
      FixedPoint p = fixed_point(lam, kk, ncap);
      for (const Permutation& w : symmetric_group(kk)) {
        ResolutionFixedPoint rp = resolution_fixed_point(p, w);
        bool coh_zero = cohomology_weight(p, w).first.is_zero();
        bool k_zero = ktheory_weight(p, w).first.is_zero();
        ++r.cases;
        if (rp.admissible == coh_zero || coh_zero != k_zero) {
          ++r.failures;
          if (r.note.empty())
            r.note = "first failure: weight vanishing vs admissibility at lambda = " +
                     lam.to_string() + ", w = " + w.to_string();
        }
        if (rp.admissible == simple_exclusion(w, kk)) ++disagreements;
      }
    }
  }
  if (r.note.empty() && disagreements > 0)
    r.note = "simple exclusion test disagrees on " + std::to_string(disagreements) +
             " points (informational)";
  return r;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  int ncap = f.ncap >= 0 ? f.ncap : 2;
  std::vector<std::string> wanted;
  const std::vector<std::string> known = {"operators",    "jacobi", "routes-coh",
                                          "routes-k",     "straighten-k", "dgroth",
                                          "vanishing",    "localize"};
  if (f.suite == "all") {
    wanted = known;
  } else {
    if (std::find(known.begin(), known.end(), f.suite) == known.end())
      throw Error("unknown suite \"" + f.suite + "\"");
    wanted.push_back(f.suite);
  }

  bool all_ok = true;
  json jsuites = json::array();
  for (const std::string& name : wanted) {
    SuiteResult r;
    if (name == "operators")
      r = suite_operators(f.k, f.seed, std::max(f.trials, 1));
    else if (name == "jacobi")
      r = suite_jacobi(f.k, f.seed, std::max(f.trials, 1));
    else if (name == "routes-coh")
      r = suite_routes(f.k, ncap, Theory::Cohomology);
    else if (name == "routes-k")
      r = suite_routes(f.k, ncap, Theory::KTheory);
    else if (name == "straighten-k")
      r = suite_straighten_k(f.k, ncap);
    else if (name == "dgroth")
      r = suite_dgroth(f.k, ncap);
    else if (name == "vanishing")
      r = suite_vanishing(f.k, ncap);
    else
      r = suite_localization(f.k, ncap, f.seed, std::max(f.trials, 1));
    all_ok = all_ok && r.failures == 0;
    if (f.format == "json") {
      json j{{"suite", r.name}, {"k", f.k},       {"n_cap", ncap},
             {"cases", r.cases}, {"failures", r.failures}};
      if (!r.note.empty()) j["note"] = r.note;
      jsuites.push_back(std::move(j));
    } else {
      out << "suite=" << r.name << " k=" << f.k << " n-cap=" << ncap << " cases=" << r.cases
          << " failures=" << r.failures << "\n";
      if (!r.note.empty()) out << "  " << r.note << "\n";
    }
  }
  if (f.format == "json") {
    out << json{{"suites", jsuites}, {"ok", all_ok}}.dump() << "\n";
  } else {
    out << (all_ok ? "PASS" : "FAIL") << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_bench(const Flags& f, std::ostream& out) {
  int ncap = f.ncap >= 0 ? f.ncap : 2;
  Theory th = theory_arg(f.theory);
  json rows = json::array();
  for (int kk = 1; kk <= f.k; ++kk) {
    std::vector<Composition> shapes;
    std::vector<int> stair;
    for (int i = 1; i <= kk; ++i) stair.push_back(std::min(kk - i, ncap));
    shapes.push_back(Composition(std::move(stair)));
    shapes.push_back(Composition(std::vector<int>(kk, std::min(3, ncap))));
    for (const Composition& lam : shapes) {
      for (Route route : {Route::Determinant, Route::Symmetrizer, Route::Operator}) {
        auto start = std::chrono::steady_clock::now();
        Polynomial v = pushforward_class(lam, kk, ncap, th, route).value;
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (f.format == "json") {
          rows.push_back({{"k", kk},
                          {"n_cap", ncap},
                          {"lam", lam.parts()},
                          {"theory", theory_name(th)},
                          {"route", route_name(route)},
                          {"ms", ms},
                          {"terms", v.term_count()}});
        } else {
          out << "k=" << kk << " n-cap=" << ncap << " lam=" << lam.to_string()
              << " theory=" << theory_name(th) << " route=" << route_name(route) << " ms=" << std::fixed
              << std::setprecision(3) << ms << " terms=" << v.term_count() << "\n";
        }
      }
    }
  }
  if (f.format == "json") out << rows.dump() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"equivariant Schubert classes of Grassmannians, three ways"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* schur = app.add_subcommand("schur", "factorial Schur class of a partition");
  add_shape_flags(schur, f);
  schur->add_option("--lam", f.lam, "partition, e.g. 2,1")->required();
  schur->add_option("--route", f.route, "det (default), sym, op or all");

  CLI::App* groth = app.add_subcommand("groth", "factorial Grothendieck class of a partition");
  add_shape_flags(groth, f);
  groth->add_option("--lam", f.lam, "partition, e.g. 2,1")->required();
  groth->add_option("--route", f.route, "det (default), sym, op or all");

  CLI::App* push = app.add_subcommand("push", "pushforward of a composition's class");
  add_shape_flags(push, f);
  push->add_option("--lam", f.lam, "composition, e.g. 0,2")->required();
  push->add_option("--theory", f.theory, "coh (default) or k");
  push->add_option("--route", f.route, "op (default), det, sym or all");

  CLI::App* straighten = app.add_subcommand("straighten", "straightening data of a composition");
  add_shape_flags(straighten, f);
  straighten->add_option("--lam", f.lam, "composition")->required();
  straighten->add_option("--theory", f.theory, "coh (default) or k");

  CLI::App* dgroth = app.add_subcommand("dgroth", "double Grothendieck polynomial");
  add_shape_flags(dgroth, f);
  dgroth->add_option("--perm", f.perm, "one-line permutation, e.g. 3,1,2")->required();

  CLI::App* localize = app.add_subcommand("localize", "restrict a class to a fixed point");
  add_shape_flags(localize, f);
  localize->add_option("--lam", f.lam, "class partition")->required();
  localize->add_option("--mu", f.mu, "fixed-point partition")->required();
  localize->add_option("--theory", f.theory, "coh (default) or k");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_shape_flags(verify, f);
  verify->add_option("--suite", f.suite,
                     "operators, jacobi, routes-coh, routes-k, straighten-k, dgroth, "
                     "vanishing, localize or all")
      ->required();
  verify->add_option("--seed", f.seed, "random seed");
  verify->add_option("--trials", f.trials, "random cases per property");

  CLI::App* bench = app.add_subcommand("bench", "timing table over the (k, n-cap) grid");
  add_shape_flags(bench, f);
  bench->add_option("--theory", f.theory, "coh (default) or k");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(schur)) return cmd_class(f, Theory::Cohomology, out);
    if (app.got_subcommand(groth)) return cmd_class(f, Theory::KTheory, out);
    if (app.got_subcommand(push)) return cmd_push(f, out);
    if (app.got_subcommand(straighten)) return cmd_straighten(f, out);
    if (app.got_subcommand(dgroth)) return cmd_dgroth(f, out);
    if (app.got_subcommand(localize)) return cmd_localize(f, out);
    if (app.got_subcommand(verify)) return cmd_verify(f, out);
    if (app.got_subcommand(bench)) return cmd_bench(f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace schubert_cli
