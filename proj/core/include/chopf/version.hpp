#pragma once

namespace chopf {

inline constexpr const char* version = "0.1.0";

}  // namespace chopf
