#pragma once

namespace nrd {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nrd
