#include "jcq/format.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace jcq::format {

std::string significant(double value, int digits) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*g", digits, value);
    return buf.data();
}

std::string csv(double value) {
    // normalise negative zero so identical runs cannot differ by sign of 0
    if (value == 0.0) value = 0.0;
    return significant(value, 12);
}

std::string exact(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

} // namespace jcq::format
