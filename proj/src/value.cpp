#include "cnqf/value.hpp"

#include <charconv>
#include <cstdio>

namespace cnqf {

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

std::string to_string(const Value& v) {
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
    if (std::holds_alternative<double>(v)) return format_number(std::get<double>(v));
    return std::get<std::string>(v);
}

Value parse_value(const std::string& text) {
    if (text == "true") return Value(true);
    if (text == "false") return Value(false);
    double d = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
    if (ec == std::errc{} && ptr == text.data() + text.size()) return Value(d);
    return Value(text);
}

} // namespace cnqf
