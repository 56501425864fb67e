#pragma once

namespace nfdeg {

inline constexpr int version_major = 1;
inline constexpr int version_minor = 0;
inline constexpr const char* version_string = "1.0";

// Version tag of the frozen convention set (pairing matrix, transvection
// sign, boundary word order, polygon orientation, cup face order, global
// sign, PRNG scheme, serialization format). Documents embed this tag so a
// convention change invalidates stored golden files loudly instead of
// silently changing results. See CONVENTIONS.md.
inline constexpr const char* conventions_tag = "conv-1";

// Schema version of instance and report documents.
inline constexpr int format_version = 1;

} // namespace nfdeg
