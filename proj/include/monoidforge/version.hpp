#ifndef MONOIDFORGE_VERSION_HPP
#define MONOIDFORGE_VERSION_HPP

namespace mf {

inline constexpr const char* kVersion = "0.1.0";

} // namespace mf

#endif
