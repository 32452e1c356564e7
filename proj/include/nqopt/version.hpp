#pragma once

namespace nqopt {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kResultsSchemaVersion = 1;

}  // namespace nqopt
