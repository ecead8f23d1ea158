#pragma once

namespace perfume {

inline constexpr const char* kToolName = "perfume-lint";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace perfume
