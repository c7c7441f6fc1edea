#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vqcat::cli {

/// Exit codes: 0 success or passing suite, 1 law violation or a distance
/// that misses --expect, 2 input error (bad flags, malformed JSON, caps).
enum Exit : int { ok = 0, violation = 1, input_error = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vqcat::cli
