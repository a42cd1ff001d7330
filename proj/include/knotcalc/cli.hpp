#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcalc {

/// Runs the command-line front end on args (program name excluded), writing
/// results to out and diagnostics to err.
///
/// Exit codes: 0 on success, including mathematically negative but valid
/// verdicts; 1 on usage or input errors; 2 when an enumeration overflows and
/// the requested certification stays inconclusive.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotcalc
