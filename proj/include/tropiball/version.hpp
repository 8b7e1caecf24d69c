#pragma once

namespace tropiball {

inline constexpr const char* kVersion = "0.1.0";

} // namespace tropiball
