#pragma once

namespace rbnlab {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace rbnlab
