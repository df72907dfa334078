#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degen::cli {

/// Entry point behind the `degen` binary. `args` excludes the program name.
/// Returns 0 on clean verdicts, 1 on axiom/criterion failures, 2 on invalid
/// input (unreadable file, schema violation, unknown subcommand).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace degen::cli
