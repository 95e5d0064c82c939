#pragma once

// Command-line surface.  Exit codes: 0 verified/true, 1 refuted/false,
// 2 usage error, 3 resource cap exhausted.

#include <string>
#include <vector>

namespace fc {

int run_cli(const std::vector<std::string>& args);

}  // namespace fc
