#include "oulad/cell.hpp"

#include <charconv>
#include <cstdio>

namespace oulad {

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return buf;
    }
    return std::string(buf, ptr);
}

std::string Cell::to_field() const {
    if (is_missing()) return "";
    if (is_integer()) return std::to_string(std::get<long long>(v_));
    if (is_real()) return format_double(std::get<double>(v_));
    return std::get<std::string>(v_);
}

}  // namespace oulad
