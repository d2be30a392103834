#pragma once

namespace questa {

inline constexpr const char* kVersion = "0.1.0";

}
