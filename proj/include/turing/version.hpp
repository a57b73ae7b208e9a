#ifndef TURING_VERSION_HPP
#define TURING_VERSION_HPP

namespace turing {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // TURING_VERSION_HPP
