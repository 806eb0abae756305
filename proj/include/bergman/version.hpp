#pragma once

namespace bergman {

inline constexpr const char* kToolName = "slanthankel";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace bergman
