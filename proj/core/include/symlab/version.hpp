#pragma once

namespace symlab {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace symlab
