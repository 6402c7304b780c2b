#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktri::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2, internal_error = 3 };

/// Runs one command line (args exclude the program name). `in` backs
/// `--input -`. Never throws.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ktri::cli
