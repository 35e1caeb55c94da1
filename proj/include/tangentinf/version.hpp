#pragma once

namespace tangentinf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tangentinf
