#pragma once

#include <string>
#include <vector>

namespace toric {

// Exit codes: 0 verdict or output computed, 2 inconclusive under caps,
// 3 input error, 4 search exhausted without a find. args excludes the
// program name. Never throws.
int run(const std::vector<std::string>& args);

} // namespace toric
