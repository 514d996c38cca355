#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "lct/errors.hpp"

namespace lct::detail {

// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text) {
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw ParseError("invalid number: '" + std::string(text) + "'");
    return v;
}

}  // namespace lct::detail
