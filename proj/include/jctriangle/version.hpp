#pragma once

namespace jct {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace jct
