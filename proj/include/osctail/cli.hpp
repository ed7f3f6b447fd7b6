#ifndef OSCTAIL_CLI_HPP
#define OSCTAIL_CLI_HPP

#include "osctail/model.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace osctail::cli {

enum ExitCode : int { Success = 0, IoFailure = 1, UsageError = 2, NumericFailure = 3 };

/// Built-in integrand named on the command line: exp:ALPHA, invsqrt,
/// cosoverx:ALPHA or zero. Throws DomainError for anything else.
Integrand parse_function(const std::string& spec);

/// Runs the command line (program name excluded). Results go to out, or to
/// the --out file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace osctail::cli

#endif // OSCTAIL_CLI_HPP
