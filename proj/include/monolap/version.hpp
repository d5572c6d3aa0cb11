#pragma once

namespace monolap {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kJsonSchema = "mono-laplace/1";

} // namespace monolap
