#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibdig::cli {

/// Parses argv (program name excluded), dispatches to a subcommand and
/// writes the report to `out`. Returns 0 on success, 1 when
/// --require-covered was given and the verdict is not covered, 2 on usage
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fibdig::cli
