// Entry point of the command-line tool, callable in-process so tests can
// check bytes and exit codes without spawning.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert_cli {

// exit codes: 0 ok, 1 verification failure, 2 invalid input
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert_cli
