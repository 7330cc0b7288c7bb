#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace cnqf {

// Virtual simulation time in milliseconds.
using VirtualMs = std::int64_t;

// Scalar value used for context attributes, policy literals and request
// fields. Numbers are carried as double throughout; bandwidths and other
// integral quantities stay well below 2^53 so the representation is exact.
using Value = std::variant<bool, double, std::string>;

// Locale-independent rendering with up to 6 significant digits for doubles.
std::string format_number(double v);

std::string to_string(const Value& v);

// Parses "true"/"false", then a number, otherwise returns the text as a
// string value.
Value parse_value(const std::string& text);

inline bool value_equals(const Value& a, const Value& b) { return a == b; }

} // namespace cnqf
