#pragma once

namespace demb {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace demb
