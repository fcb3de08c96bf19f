#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "uml/schur.hpp"

namespace uml::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotVerified = 1;
inline constexpr int kExitInvalidInput = 2;

/// Parses `const:<re>,<im>`, `negmob:<a>`, `blaschke:<theta>;<re>,<im>;...`
/// or `taylor:<c0>,<c1>,...` (coefficients may be written re+imi).
/// Throws Errc::InvalidArgument on malformed text and the schur errors on
/// out-of-ball parameters.
SchurFunction parse_omega(std::string_view text);

/// Runs the command line in `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uml::cli
