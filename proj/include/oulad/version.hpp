#pragma once

namespace oulad {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace oulad
