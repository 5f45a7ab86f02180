#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forestf {

// Runs the forestf command line. Returns the process exit code: 0 success,
// 1 parse error, 2 precondition violation, 3 budget exhaustion.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forestf
