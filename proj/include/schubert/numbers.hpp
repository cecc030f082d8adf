// Exact scalar types: arbitrary-precision integers for coefficients,
// rationals for point evaluation.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace schubert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& v) { return v.str(); }

// exact power with integer exponent; base must be nonzero when e < 0
Rat rat_pow(const Rat& base, long e);

}  // namespace schubert
