#pragma once

namespace qlink {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace qlink
