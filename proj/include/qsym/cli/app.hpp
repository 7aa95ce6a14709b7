#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsym::cli {

/// Full command-line entry point. args excludes the program name. The report goes
/// to --out when given, else to `out`; diagnostics go to `err`. Returns 0..3.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsym::cli
