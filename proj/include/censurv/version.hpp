#ifndef CENSURV_VERSION_HPP
#define CENSURV_VERSION_HPP

namespace censurv {
inline constexpr const char* version_string = "0.1.0";
}

#endif
