#pragma once

namespace nuspec {

inline constexpr const char* kToolName = "nuspec";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace nuspec
