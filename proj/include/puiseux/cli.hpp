#ifndef PUISEUX_CLI_HPP
#define PUISEUX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace puiseux {

/// Full command-line front end, callable in-process. `args` excludes the
/// program name. Returns the process exit code: 0 success, 1 usage error,
/// 2 invalid specification, 3 enumeration cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace puiseux

#endif  // PUISEUX_CLI_HPP
