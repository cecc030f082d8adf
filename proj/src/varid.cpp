#include "schubert/varid.hpp"

namespace schubert {

const char* family_name(Family f) {
  switch (f) {
    case Family::X: return "x";
    case Family::Tc: return "t";
    case Family::Tk: return "T";
    case Family::E: return "E";
  }
  return "?";
}

std::string var_text(VarId v) {
  return std::string(family_name(v.family)) + std::to_string(v.index);
}

}  // namespace schubert
