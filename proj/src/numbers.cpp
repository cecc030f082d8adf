#include "schubert/numbers.hpp"

#include <stdexcept>

namespace schubert {

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw std::domain_error("rat_pow: zero base, negative exponent");
  Rat b = e < 0 ? Rat(1) / base : base;
  long n = e < 0 ? -e : e;
  Rat acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

}  // namespace schubert
