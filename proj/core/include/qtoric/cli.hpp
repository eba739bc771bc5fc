#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtoric {

/// The command-line surface. args excludes the program name. Input files
/// named "-" (or omitted) are read from `in`. Exit codes: 0 success, 1 usage
/// error, 2 invalid input, 3 condition false (check-condition only).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace qtoric
