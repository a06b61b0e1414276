// Copyright 2026 The GCR Solver Authors
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

#ifndef GCR_VALUE_HPP_
#define GCR_VALUE_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gcr {

/// A capture time counted in turns: a nonnegative integer or infinity.
///
/// Infinity is a dedicated sentinel that compares greater than every finite
/// value. Addition saturates, so `infinity() + 1 == infinity()`.
class Value {
 public:
  using rep = std::uint32_t;

  constexpr Value() = default;
  constexpr explicit Value(rep turns) : raw_(turns) {
    if (turns == kInfinityRaw) throw std::out_of_range("finite value overflows");
  }

  static constexpr Value infinity() {
    Value v;
    v.raw_ = kInfinityRaw;
    return v;
  }

  constexpr bool is_finite() const { return raw_ != kInfinityRaw; }
  constexpr bool is_infinite() const { return raw_ == kInfinityRaw; }

  /// Finite count; throws on infinity.
  constexpr rep turns() const {
    if (!is_finite()) throw std::logic_error("turns() called on infinite value");
    return raw_;
  }

  constexpr Value operator+(rep n) const {
    if (!is_finite()) return *this;
    if (n >= kInfinityRaw - raw_) return infinity();
    return Value(raw_ + n);
  }

  constexpr auto operator<=>(const Value&) const = default;
  constexpr bool operator==(const Value&) const = default;

  std::string to_string() const { return is_finite() ? std::to_string(raw_) : "infinity"; }

  /// Inverse of to_string(); throws std::invalid_argument on anything else.
  static Value parse(const std::string& text) {
    if (text == "infinity") return infinity();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("not a value: '" + text + "'");
    const unsigned long long n = std::stoull(text);
    if (n >= kInfinityRaw) throw std::out_of_range("value too large: " + text);
    return Value(static_cast<rep>(n));
  }

 private:
  static constexpr rep kInfinityRaw = std::numeric_limits<rep>::max();
  rep raw_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.to_string(); }

}  // namespace gcr

#endif  // GCR_VALUE_HPP_
