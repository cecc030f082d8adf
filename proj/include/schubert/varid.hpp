// Variable identifiers.  Four families share one polynomial ring:
//   X    Chern roots / flag variables          prints x1, x2, ...
//   Tc   cohomology torus parameters           prints t1, t2, ...
//   Tk   K-theory torus parameters             prints T1, T2, ...
//   E    exponentials e^{t_i}, Laurent-capable prints E1, E2, ...
// Only family E may carry negative exponents.

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace schubert {

enum class Family : std::uint8_t { X = 0, Tc = 1, Tk = 2, E = 3 };

const char* family_name(Family f);  // "x", "t", "T", "E"

struct VarId {
  Family family{Family::X};
  std::int32_t index{1};  // 1-based

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

inline constexpr VarId xv(int i) { return {Family::X, i}; }
inline constexpr VarId tv(int i) { return {Family::Tc, i}; }
inline constexpr VarId Tv(int i) { return {Family::Tk, i}; }
inline constexpr VarId ev(int i) { return {Family::E, i}; }

std::string var_text(VarId v);  // e.g. "x3"

}  // namespace schubert
