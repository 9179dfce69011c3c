#pragma once

namespace secord {

/// Library semantic version.
inline constexpr const char* version_string = "1.0.0";

} // namespace secord
