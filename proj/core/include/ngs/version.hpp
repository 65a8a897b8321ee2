#pragma once

namespace ngs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ngs
