#ifndef NAROP_CLI_CORE_HPP
#define NAROP_CLI_CORE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace narop::cli {

/// Runs one CLI invocation in-process.  `args` excludes the program name.
/// Returns the process exit code:
///   0 success, 2 parse/usage error, 3 resource bound exceeded,
///   4 reproduction mismatch, 1 unexpected internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace narop::cli

#endif
