#pragma once

namespace pcn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pcn
