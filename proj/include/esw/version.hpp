#pragma once

namespace esw {

inline constexpr const char* kToolName = "eswitness";
inline constexpr const char* kToolVersion = "0.3.1";

}  // namespace esw
