#pragma once

namespace schur {
inline constexpr const char* kVersion = "0.1.0";
}
