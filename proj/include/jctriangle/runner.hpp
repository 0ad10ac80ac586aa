#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jctriangle/config.hpp"
#include "jctriangle/table.hpp"

namespace jct {

struct RunResult {
  std::vector<std::string> files_written;  // CSV first, then JSON mirrors
};

// Execute a finalized config: builds the table(s) for cfg.subcommand and
// writes them under cfg.out_dir. Per-node numeric failures inside sweeps are
// masked; failures that invalidate the whole run propagate as exceptions.
RunResult run(const RunConfig& cfg);

// Chunked index-parallel map: body(i) for i in [0, n), executed on
// cfg-specified thread count. Results must be written into preallocated
// index-addressed storage by the body; the helper only partitions and joins.
void parallel_for(int n, int threads, const std::function<void(int)>& body);

}  // namespace jct
