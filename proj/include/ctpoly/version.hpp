#pragma once

namespace ctpoly {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ctpoly
