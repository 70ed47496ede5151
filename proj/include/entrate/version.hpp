#pragma once

namespace entrate {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace entrate
