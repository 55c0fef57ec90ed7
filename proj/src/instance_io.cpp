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

#include "mdfcda/instance_io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mdfcda {

namespace {

std::string format_double(double v)
{
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& token, std::size_t line)
{
  double v = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw std::invalid_argument("line " + std::to_string(line) + ": bad number '" + token + "'");
  return v;
}

template <typename Int>
Int parse_int(const std::string& token, std::size_t line)
{
  Int v{};
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw std::invalid_argument("line " + std::to_string(line) + ": bad integer '" + token + "'");
  return v;
}

template <typename Bid>
void write_pairs(std::ostringstream& out, const Bid& bid)
{
  for (std::size_t l = 0; l < bid.resource_types(); ++l)
    out << ' ' << bid.unit_prices()[l].to_string() << ' ' << bid.quantities()[l];
}

}  // namespace

std::string dump_instance(const WdpInstance& instance)
{
  std::ostringstream out;
  out << "mdfcda-instance 1\n";
  out << "types " << instance.shape().resource_types << '\n';
  for (const auto& p : instance.providers())
  {
    out << "provider " << to_index(p.id());
    write_pairs(out, p);
    out << '\n';
  }
  for (const auto& c : instance.consumers())
  {
    out << "consumer " << to_index(c.bid().id()) << ' ' << format_double(c.fairness_factor());
    write_pairs(out, c.bid());
    out << '\n';
  }
  return out.str();
}

WdpInstance load_instance(const std::string& text)
{
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::size_t types = 0;
  bool header = false;
  std::vector<ExtendedConsumerBid> consumers;
  std::vector<ProviderBid> providers;

  auto read_pairs = [&](std::istringstream& fields, std::vector<Money>& prices, std::vector<std::int32_t>& qty) {
    for (std::size_t l = 0; l < types; ++l)
    {
      std::string p, q;
      if (!(fields >> p >> q))
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " + std::to_string(types) +
                                    " (price, quantity) pairs");
      prices.push_back(Money::parse(p));
      qty.push_back(parse_int<std::int32_t>(q, line_no));
    }
    std::string extra;
    if (fields >> extra)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": trailing field '" + extra + "'");
  };

  while (std::getline(in, line))
  {
    ++line_no;
    if (line.empty() || line.front() == '#')
      continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    if (!header)
    {
      std::string version;
      fields >> version;
      if (kind != "mdfcda-instance" || version != "1")
        throw std::invalid_argument("not an mdfcda-instance v1 document");
      header = true;
      continue;
    }
    if (kind == "types")
    {
      std::string v;
      fields >> v;
      types = parse_int<std::size_t>(v, line_no);
    }
    else if (kind == "provider" || kind == "consumer")
    {
      if (types == 0)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": 'types' must precede bids");
      std::string id_text;
      fields >> id_text;
      const auto id = parse_int<std::uint32_t>(id_text, line_no);
      std::vector<Money> prices;
      std::vector<std::int32_t> qty;
      if (kind == "provider")
      {
        read_pairs(fields, prices, qty);
        providers.emplace_back(ProviderId{id}, std::move(prices), std::move(qty));
      }
      else
      {
        std::string ff;
        fields >> ff;
        const double factor = parse_double(ff, line_no);
        read_pairs(fields, prices, qty);
        consumers.emplace_back(ConsumerBid(ConsumerId{id}, std::move(prices), std::move(qty)), factor);
      }
    }
    else
    {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown record '" + kind + "'");
    }
  }
  if (!header)
    throw std::invalid_argument("empty instance document");
  return WdpInstance(types, std::move(consumers), std::move(providers));
}

}  // namespace mdfcda
