#pragma once

namespace cubepack {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cubepack
