#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ontolint {

// The whole command line behind the ontolint binary, factored out so it
// can be driven in-process.  Returns the exit code: 0 clean, 1 warnings,
// 2 errors, 3 parse/io/usage failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ontolint
