#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vw::cli {

/// Runs one command-line invocation (argv without the program name).
/// Exit status: 0 on success or EQUAL, 1 on comparison failure, 2 on usage
/// errors (unknown flag, unknown surface, inconsistent custom data).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vw::cli
