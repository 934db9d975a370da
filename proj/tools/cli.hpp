#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strat::cli {

enum Exit { kTrue = 0, kFalse = 1, kInputError = 2, kCapability = 3 };

/// Runs one invocation; args exclude the program name. Documents go to out,
/// diagnostics to err.
int execute(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace strat::cli
