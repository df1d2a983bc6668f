#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcc8::cli {

/// Exit codes: 0 success, 1 verification failure (soundness violations,
/// inconsistent network, incomplete witness coverage, aborted run),
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcc8::cli
