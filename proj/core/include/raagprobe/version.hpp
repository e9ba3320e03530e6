#pragma once

namespace raagprobe {

inline constexpr const char* kVersion = "0.1.0";

}
