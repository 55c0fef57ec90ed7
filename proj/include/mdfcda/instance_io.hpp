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

#ifndef MDFCDA_INSTANCE_IO_HPP
#define MDFCDA_INSTANCE_IO_HPP

#include <string>

#include "mdfcda/wdp_solver.hpp"

namespace mdfcda {

// Line-oriented dump of a WdpInstance, one record per bid:
//
//   mdfcda-instance 1
//   types 2
//   provider 0 5.000 1 7.000 5
//   consumer 3 -2.5 10.000 2 0.000 0
//
// Provider and consumer lines list (unit price, quantity) pairs per type.
// Consumer lines carry the fairness factor in shortest round-trip decimal
// form, so dump -> load -> dump is byte-identical. Lines starting with '#'
// are ignored on load.
std::string dump_instance(const WdpInstance& instance);
WdpInstance load_instance(const std::string& text);

}  // namespace mdfcda

#endif  // MDFCDA_INSTANCE_IO_HPP
