#pragma once

namespace arseg {

inline constexpr const char* kVersion = "0.1.0";

} // namespace arseg
