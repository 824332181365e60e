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

// Graph edit distance between circuit DAGs with unit costs: node
// insert/delete/relabel and edge insert/delete each cost 1. Labels are gate
// kinds; edges are unlabeled and directed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qobf/dag.hpp"

namespace qobf {

enum class GedMode { Exact, Bounded };

std::string_view ged_mode_name(GedMode mode);

struct GedResult {
  GedMode mode = GedMode::Exact;
  double distance = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  /// max(|V1|,|V2|) + max(|E1|,|E2|).
  double denominator = 0.0;

  double normalized() const { return denominator > 0.0 ? distance / denominator : 0.0; }
  double normalized_lower() const { return denominator > 0.0 ? lower / denominator : 0.0; }
  double normalized_upper() const { return denominator > 0.0 ? upper / denominator : 0.0; }
};

inline constexpr std::size_t kDefaultGedBudget = 12;
inline constexpr std::uint64_t kDefaultGedExpansionLimit = 20'000'000;

/// Edit cost of a node mapping: mapping[u] is the image of g1 node u in g2,
/// or nullopt for a deletion. Unmapped g2 nodes are insertions.
std::size_t mapping_cost(const CircuitDag &g1, const CircuitDag &g2,
                         const std::vector<std::optional<std::size_t>> &mapping);

/// Cheap bounds: label multiset plus edge count (lower); the better of a
/// greedy label-preserving mapping and a label-sequence alignment in node
/// order (upper).
std::size_t ged_lower_bound(const CircuitDag &g1, const CircuitDag &g2);
std::size_t ged_greedy_upper_bound(const CircuitDag &g1, const CircuitDag &g2);

/// Exact branch-and-bound when both graphs have at most `budget` nodes and the
/// search stays within `expansion_limit` nodes; otherwise bounded mode with
/// the midpoint of the bounds as the headline distance.
GedResult norm_ged(const CircuitDag &g1, const CircuitDag &g2, std::size_t budget = kDefaultGedBudget,
                   std::uint64_t expansion_limit = kDefaultGedExpansionLimit);

}  // namespace qobf
