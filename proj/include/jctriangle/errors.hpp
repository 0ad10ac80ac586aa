#pragma once

#include <stdexcept>
#include <string>

namespace jct {

// Numeric failures carry their own types so callers (CLI, sweeps) can map
// them to exit codes or per-node masks without string matching.

struct DefectiveAtEpError : std::runtime_error {
  explicit DefectiveAtEpError(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfReachError : std::runtime_error {
  explicit OutOfReachError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateExpansionError : std::runtime_error {
  explicit DegenerateExpansionError(const std::string& what) : std::runtime_error(what) {}
};

struct BranchPairingError : std::runtime_error {
  explicit BranchPairingError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jct
