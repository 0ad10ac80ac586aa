#pragma once

#include <string>
#include <vector>

#include "jctriangle/config.hpp"

namespace jct {

// Named parameter sets reproducing the library's reference sweeps. Each
// carries a default subcommand; running another subcommand against the same
// preset reuses its model block.
std::vector<std::string> preset_names();
RunConfig preset_config(const std::string& name);

}  // namespace jct
