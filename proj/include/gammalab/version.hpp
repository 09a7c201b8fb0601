#pragma once

namespace gammalab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gammalab
