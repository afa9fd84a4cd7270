#pragma once

namespace relay {
inline constexpr const char* kVersion = "0.1.0";
}
