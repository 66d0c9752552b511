#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace hns {

/// Shortest decimal form that round-trips the double; locale-independent.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace hns
