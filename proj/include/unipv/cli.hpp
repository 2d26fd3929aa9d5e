#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unipv::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kComputation = 3 };

/// Runs one command line (args[0] is the program name). Documents go to out, or to
/// --output when given; failures print one line to err:
///   status=<verification-failed|usage-error|computation-error> reason="..."
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unipv::cli
