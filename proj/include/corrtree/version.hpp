#pragma once

#include <string_view>

namespace corrtree {

inline constexpr std::string_view kToolName = "corrtree";
inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace corrtree
