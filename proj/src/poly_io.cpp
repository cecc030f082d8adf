#include "schubert/poly_io.hpp"

#include <sstream>

namespace schubert {

static void append_text_monomial(std::ostringstream& out, const Monomial& m) {
  bool first = true;
  for (const auto& [v, e] : m.factors) {
    if (!first) out << '*';
    first = false;
    out << var_text(v);
    if (e != 1) out << '^' << e;
  }
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    if (m.is_constant()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << '*';
      append_text_monomial(out, m);
    }
  }
  return out.str();
}

static void append_latex_var(std::ostringstream& out, VarId v, int e) {
  if (v.family == Family::E) {
    // E_i stands for the exponential of t_i
    out << "e^{";
    if (e == -1)
      out << '-';
    else if (e != 1)
      out << e << ' ';
    out << "t_";
    if (v.index >= 10)
      out << '{' << v.index << '}';
    else
      out << v.index;
    out << '}';
    return;
  }
  out << family_name(v.family) << '_';
  if (v.index >= 10)
    out << '{' << v.index << '}';
  else
    out << v.index;
  if (e != 1) out << "^{" << e << '}';
}

std::string to_latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    if (m.is_constant()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << ' ';
      bool fv = true;
      for (const auto& [v, e] : m.factors) {
        if (!fv) out << ' ';
        fv = false;
        append_latex_var(out, v, e);
      }
    }
  }
  return out.str();
}

nlohmann::json poly_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& [v, e] : m.factors)
      vars.push_back({{"family", family_name(v.family)}, {"index", v.index}, {"exp", e}});
    arr.push_back({{"coeff", c.str()}, {"vars", std::move(vars)}});
  }
  return arr;
}

static Family family_from_name(const std::string& s) {
  if (s == "x") return Family::X;
  if (s == "t") return Family::Tc;
  if (s == "T") return Family::Tk;
  if (s == "E") return Family::E;
  throw Error("polynomial JSON: unknown family \"" + s + "\"");
}

Polynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error("polynomial JSON: expected an array of terms");
  std::vector<Polynomial::Term> terms;
  terms.reserve(j.size());
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("vars"))
      throw Error("polynomial JSON: term needs \"coeff\" and \"vars\"");
    Int c;
    const auto& cj = t["coeff"];
    if (cj.is_string())
      c = Int(cj.get<std::string>());
    else if (cj.is_number_integer())
      c = Int(cj.get<long long>());
    else
      throw Error("polynomial JSON: \"coeff\" must be a decimal string");
    Monomial m;
    if (!t["vars"].is_array()) throw Error("polynomial JSON: \"vars\" must be an array");
    for (const auto& vj : t["vars"]) {
      if (!vj.is_object() || !vj.contains("family") || !vj.contains("index") || !vj.contains("exp"))
        throw Error("polynomial JSON: var needs \"family\", \"index\", \"exp\"");
      Family fam = family_from_name(vj["family"].get<std::string>());
      int index = vj["index"].get<int>();
      int exp = vj["exp"].get<int>();
      if (index < 1) throw Error("polynomial JSON: variable index must be >= 1");
      if (exp == 0) throw Error("polynomial JSON: zero exponent");
      if (exp < 0 && fam != Family::E)
        throw Error("polynomial JSON: negative exponent outside family E");
      m = m * Monomial::var({fam, index}, exp);
    }
    terms.emplace_back(std::move(m), std::move(c));
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace schubert
