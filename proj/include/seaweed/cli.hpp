#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "seaweed/lie.hpp"

namespace seaweed::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,  // parse or validation failure
  kIo = 3,
  kPrecondition = 4,  // e.g. non-Frobenius input where Frobenius is required
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Structure constants, one bracket per line: `i j -> k:coeff[,k:coeff...]`,
/// 1-based indices, integer or p/q coefficients. `#` starts a comment; an
/// optional `dim N` line fixes the dimension (default: largest index seen).
/// Throws std::invalid_argument with the line number on malformed input.
LieData parse_structure_constants(std::string_view text);

}  // namespace seaweed::cli
