// Copyright 2026 The mdfcda Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MDFCDA_MONEY_HPP
#define MDFCDA_MONEY_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mdfcda {

/// Exact currency amount stored as an integer number of half-cents.
///
/// Bid prices are whole cents, so the midpoint of any two bid prices is a
/// whole number of half-cents and settlement stays exact.
class Money
{
public:
  static constexpr std::int64_t kTicksPerUnit = 200;
  static constexpr std::int64_t kTicksPerCent = 2;

  constexpr Money() = default;

  static constexpr Money from_ticks(std::int64_t ticks) { return Money(ticks); }
  static constexpr Money from_cents(std::int64_t cents) { return Money(cents * kTicksPerCent); }
  static constexpr Money from_units(std::int64_t units) { return Money(units * kTicksPerUnit); }

  /// Nearest half-cent to a decimal currency amount.
  static Money from_double(double units);

  /// Parses "12", "12.5", "-0.005"; rejects anything finer than a half-cent.
  static Money parse(std::string_view text);

  constexpr std::int64_t ticks() const { return ticks_; }
  constexpr bool is_whole_cents() const { return ticks_ % kTicksPerCent == 0; }
  double to_double() const { return static_cast<double>(ticks_) / kTicksPerUnit; }

  /// Exact decimal form with three fractional digits, e.g. "150.000", "12.505".
  std::string to_string() const;

  constexpr Money& operator+=(Money other) { ticks_ += other.ticks_; return *this; }
  constexpr Money& operator-=(Money other) { ticks_ -= other.ticks_; return *this; }

  friend constexpr Money operator+(Money a, Money b) { return Money(a.ticks_ + b.ticks_); }
  friend constexpr Money operator-(Money a, Money b) { return Money(a.ticks_ - b.ticks_); }
  friend constexpr Money operator-(Money a) { return Money(-a.ticks_); }
  friend constexpr Money operator*(Money a, std::int64_t k) { return Money(a.ticks_ * k); }
  friend constexpr Money operator*(std::int64_t k, Money a) { return Money(a.ticks_ * k); }

  friend constexpr auto operator<=>(Money, Money) = default;
  friend constexpr bool operator==(Money, Money) = default;

private:
  constexpr explicit Money(std::int64_t ticks) : ticks_(ticks) {}

  std::int64_t ticks_ = 0;
};

/// Exact midpoint of two whole-cent prices.
Money midpoint(Money a, Money b);

}  // namespace mdfcda

#endif  // MDFCDA_MONEY_HPP
