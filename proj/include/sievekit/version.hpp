#pragma once

namespace sievekit {

inline constexpr const char* kEngineVersion = "0.1.0";

} // namespace sievekit
