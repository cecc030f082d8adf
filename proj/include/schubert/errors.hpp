// Error types thrown by the library.  Everything derives from Error so the
// CLI can map domain failures to one exit code.

#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// polynomial layer
struct NotDivisible : Error {
  explicit NotDivisible(const std::string& msg) : Error(msg) {}
};
struct NegativeExponentSubstitution : Error {
  explicit NegativeExponentSubstitution(const std::string& msg) : Error(msg) {}
};
struct MissingAssignment : Error {
  explicit MissingAssignment(const std::string& msg) : Error(msg) {}
};
struct ZeroAtLaurentPole : Error {
  explicit ZeroAtLaurentPole(const std::string& msg) : Error(msg) {}
};
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

// combinatorics / classes layer
struct PartTooLarge : Error {
  explicit PartTooLarge(const std::string& msg) : Error(msg) {}
};

// numeric verification layer
struct DegenerateSpecialization : Error {
  explicit DegenerateSpecialization(const std::string& msg) : Error(msg) {}
};

}  // namespace schubert
