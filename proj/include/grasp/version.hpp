#pragma once

namespace grasp {

inline constexpr const char* kLibraryVersion = "0.1.0";

} // namespace grasp
