#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simplexcover::cli {

enum ExitCode { Ok = 0, InputFailure = 1, AuditFailure = 2 };

/// Runs one subcommand. args[0] is the program name. The JSON report goes to
/// `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplexcover::cli
