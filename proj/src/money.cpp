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

#include "mdfcda/money.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mdfcda {

namespace {

// One tick is 0.005 currency units, i.e. 5 thousandths.
constexpr std::int64_t kMilliPerTick = 5;

}  // namespace

Money Money::from_double(double units)
{
  if (!std::isfinite(units))
    throw std::invalid_argument("money amount must be finite");
  return Money(static_cast<std::int64_t>(std::llround(units * kTicksPerUnit)));
}

Money Money::parse(std::string_view text)
{
  const std::string original(text);
  auto fail = [&]() -> Money {
    throw std::invalid_argument("malformed money amount '" + original + "'");
  };
  if (text.empty())
    return fail();

  bool negative = false;
  if (text.front() == '-' || text.front() == '+')
  {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const auto whole = text.substr(0, dot);
  auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty())
    return fail();

  std::int64_t milli = 0;
  for (char c : whole)
  {
    if (c < '0' || c > '9')
      return fail();
    milli = milli * 10 + (c - '0');
  }
  // Strip trailing zeros so "1.2500" is accepted.
  while (frac.size() > 3 && frac.back() == '0')
    frac.remove_suffix(1);
  if (frac.size() > 3)
    return fail();
  std::int64_t frac_milli = 0;
  for (std::size_t i = 0; i < 3; ++i)
  {
    int digit = 0;
    if (i < frac.size())
    {
      if (frac[i] < '0' || frac[i] > '9')
        return fail();
      digit = frac[i] - '0';
    }
    frac_milli = frac_milli * 10 + digit;
  }
  milli = milli * 1000 + frac_milli;
  if (milli % kMilliPerTick != 0)
    throw std::invalid_argument("money amount '" + original + "' is finer than a half-cent");
  const auto ticks = milli / kMilliPerTick;
  return Money(negative ? -ticks : ticks);
}

std::string Money::to_string() const
{
  const std::int64_t milli = ticks_ * kMilliPerTick;
  const std::int64_t mag = milli < 0 ? -milli : milli;
  std::string frac = std::to_string(mag % 1000);
  frac.insert(0, 3 - frac.size(), '0');
  return (milli < 0 ? "-" : "") + std::to_string(mag / 1000) + "." + frac;
}

Money midpoint(Money a, Money b)
{
  const auto sum = a.ticks() + b.ticks();
  if (sum % 2 != 0)
    throw std::invalid_argument("midpoint of " + a.to_string() + " and " + b.to_string() +
                                " is not representable; bid prices must be whole cents");
  return Money::from_ticks(sum / 2);
}

}  // namespace mdfcda
