#pragma once

namespace nilsym {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nilsym
