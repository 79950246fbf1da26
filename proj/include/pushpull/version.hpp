#pragma once

namespace pushpull {

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace pushpull
