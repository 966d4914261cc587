//
// Copyright 2026 The stickynoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef STICKY_VALUE_HPP_
#define STICKY_VALUE_HPP_

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>

#include "sticky/error.hpp"

namespace sticky {

enum class ValueKind { kInteger, kDecimal, kText };

inline const char* to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::kInteger:
      return "integer";
    case ValueKind::kDecimal:
      return "decimal";
    case ValueKind::kText:
      return "text";
  }
  return "?";
}

// Parses the whole of `text` as a base-10 int64. No sign other than '-'.
inline std::optional<int64_t> parse_integer(std::string_view text) {
  if (text.empty()) return std::nullopt;
  int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return out;
}

// Parses the whole of `text` as a finite double.
inline std::optional<double> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  double out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  if (!std::isfinite(out)) return std::nullopt;
  return out;
}

// An attribute value. Integers and decimals are ordered numerically against
// each other; text is ordered lexicographically (byte-wise) and is never
// comparable with numbers.
class Value {
 public:
  Value() : data_(int64_t{0}) {}

  static Value Integer(int64_t v) { return Value(v); }
  static Value Decimal(double v) {
    if (!std::isfinite(v)) throw InvalidArgument("decimal values must be finite");
    // -0.0 and 0.0 must share one canonical rendering.
    return Value(v == 0.0 ? 0.0 : v);
  }
  static Value Text(std::string v) { return Value(std::move(v)); }

  ValueKind kind() const { return static_cast<ValueKind>(data_.index()); }
  bool is_numeric() const { return kind() != ValueKind::kText; }

  int64_t as_integer() const { return std::get<int64_t>(data_); }
  double as_decimal() const { return std::get<double>(data_); }
  const std::string& as_text() const { return std::get<std::string>(data_); }

  // Numeric payload widened to long double (exact for every int64).
  long double numeric() const {
    if (kind() == ValueKind::kInteger) return static_cast<long double>(as_integer());
    return static_cast<long double>(as_decimal());
  }

  // Canonical rendering: integers in shortest decimal form, decimals in
  // shortest round-trip form always carrying a '.' or exponent (so 2.0 renders
  // as "2.0" and never collides with the integer 2), text verbatim.
  std::string canonical() const {
    switch (kind()) {
      case ValueKind::kInteger: {
        char buf[32];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), as_integer());
        return std::string(buf, ptr);
      }
      case ValueKind::kDecimal: {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), as_decimal());
        std::string out(buf, ptr);
        if (out.find_first_of(".e") == std::string::npos) out += ".0";
        return out;
      }
      case ValueKind::kText:
        return as_text();
    }
    return {};
  }

  // Structural equality: same kind and same payload.
  friend bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }

 private:
  explicit Value(int64_t v) : data_(v) {}
  explicit Value(double v) : data_(v) {}
  explicit Value(std::string v) : data_(std::move(v)) {}

  std::variant<int64_t, double, std::string> data_;
};

inline bool comparable(const Value& a, const Value& b) { return a.is_numeric() == b.is_numeric(); }

// Three-way comparison; throws EvalError for text vs. number.
inline int compare(const Value& a, const Value& b) {
  if (!comparable(a, b)) {
    throw EvalError(std::string("cannot compare ") + to_string(a.kind()) + " with " +
                    to_string(b.kind()));
  }
  if (a.kind() == ValueKind::kText) {
    int c = a.as_text().compare(b.as_text());
    return (c > 0) - (c < 0);
  }
  if (a.kind() == ValueKind::kInteger && b.kind() == ValueKind::kInteger) {
    return (a.as_integer() > b.as_integer()) - (a.as_integer() < b.as_integer());
  }
  long double x = a.numeric(), y = b.numeric();
  return (x > y) - (x < y);
}

// Typed reading of a literal: integer if it parses as one, else decimal if it
// parses as one, else text.
inline Value infer_value(std::string_view text) {
  if (auto i = parse_integer(text)) return Value::Integer(*i);
  if (auto d = parse_decimal(text)) return Value::Decimal(*d);
  return Value::Text(std::string(text));
}

}  // namespace sticky

#endif  // STICKY_VALUE_HPP_
