#pragma once

namespace addfeq {

inline constexpr const char* kToolName = "addfeq";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace addfeq
