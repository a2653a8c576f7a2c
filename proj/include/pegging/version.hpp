#pragma once

namespace peg {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace peg
