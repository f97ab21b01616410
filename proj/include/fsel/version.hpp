#pragma once

namespace fsel {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fsel
