#pragma once

namespace tameblocks {

inline constexpr const char* library_version = "0.1.0";

} // namespace tameblocks
