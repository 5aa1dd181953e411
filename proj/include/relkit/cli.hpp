#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relkit::cli {

enum Exit : int { ok = 0, negative = 1, usage = 2, violation = 3 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relkit::cli
