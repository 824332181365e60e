// Copyright 2026 The qobf Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace qobf {

/// Measured bitstring -> occurrence count. Character i of a key is the i-th
/// measured qubit in ascending order.
struct Counts {
  std::map<std::string, std::uint64_t> counts;

  std::uint64_t shots() const {
    std::uint64_t total = 0;
    for (const auto &[key, n] : counts) {
      total += n;
    }
    return total;
  }
  bool empty() const { return counts.empty(); }
  bool operator==(const Counts &) const = default;
};

/// Bitstring -> probability.
using Distribution = std::map<std::string, double>;

}  // namespace qobf
