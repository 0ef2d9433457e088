#pragma once

#include <string>
#include <vector>

namespace pluritop {

// Entry point behind the pluritop binary. Exit codes: 0 success or positive
// classification, 1 identity-suite failure, 2 usage/format error,
// 3 negative classification.
int cli_main(int argc, const char* const* argv);

// Convenience for in-process tests; args exclude the program name.
int cli_main(const std::vector<std::string>& args);

}  // namespace pluritop
