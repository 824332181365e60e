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

#include "qobf/ged.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qobf {

namespace {

std::size_t label_common(const std::vector<GateKind> &a, const std::vector<GateKind> &b) {
  std::map<GateKind, std::size_t> count;
  for (GateKind k : a) {
    ++count[k];
  }
  std::size_t common = 0;
  for (GateKind k : b) {
    auto it = count.find(k);
    if (it != count.end() && it->second > 0) {
      --it->second;
      ++common;
    }
  }
  return common;
}

std::size_t absdiff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

class Search {
 public:
  Search(const CircuitDag &g1, const CircuitDag &g2, std::size_t upper, std::uint64_t limit)
      : g1_(g1), g2_(g2), best_(upper), limit_(limit), map_(g1.num_nodes()), used_(g2.num_nodes(), false) {
    order_.resize(g1.num_nodes());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return degree(g1_, a) > degree(g1_, b);
    });
    assigned_.assign(g1.num_nodes(), false);
  }

  /// False when the expansion limit was hit.
  bool run() {
    recurse(0, 0);
    return !aborted_;
  }
  std::size_t best() const { return best_; }

 private:
  static std::size_t degree(const CircuitDag &g, std::size_t v) {
    return g.successors(v).size() + g.predecessors(v).size();
  }

  std::size_t bound(std::size_t depth) const {
    std::vector<GateKind> rest1;
    for (std::size_t i = depth; i < order_.size(); ++i) {
      rest1.push_back(g1_.label(order_[i]));
    }
    std::vector<GateKind> rest2;
    for (std::size_t v = 0; v < g2_.num_nodes(); ++v) {
      if (!used_[v]) {
        rest2.push_back(g2_.label(v));
      }
    }
    const std::size_t nodes = std::max(rest1.size(), rest2.size()) - label_common(rest1, rest2);
    std::size_t pending1 = 0;
    for (const auto &[u, v] : g1_.edges()) {
      pending1 += !(assigned_[u] && assigned_[v]);
    }
    std::size_t pending2 = 0;
    for (const auto &[u, v] : g2_.edges()) {
      pending2 += !(used_[u] && used_[v]);
    }
    return nodes + absdiff(pending1, pending2);
  }

  /// Cost added by assigning g1 node u to image (or deleting it), counting
  /// node cost and edges to already-assigned g1 nodes and used g2 nodes.
  std::size_t step_cost(std::size_t u, std::optional<std::size_t> image) const {
    std::size_t cost = 0;
    if (!image) {
      cost += 1;
    } else if (g1_.label(u) != g2_.label(*image)) {
      cost += 1;
    }
    std::size_t matched = 0;
    for (std::size_t w : g1_.successors(u)) {
      if (assigned_[w]) {
        const bool ok = image && map_[w] && g2_.has_edge(*image, *map_[w]);
        cost += ok ? 0 : 1;
        matched += ok;
      }
    }
    for (std::size_t w : g1_.predecessors(u)) {
      if (assigned_[w]) {
        const bool ok = image && map_[w] && g2_.has_edge(*map_[w], *image);
        cost += ok ? 0 : 1;
        matched += ok;
      }
    }
    if (image) {
      // g2 edges between image and used nodes not covered by a g1 edge.
      std::size_t incident = 0;
      for (std::size_t w : g2_.successors(*image)) {
        incident += used_[w];
      }
      for (std::size_t w : g2_.predecessors(*image)) {
        incident += used_[w];
      }
      cost += incident - matched;
    }
    return cost;
  }

  void recurse(std::size_t depth, std::size_t cost) {
    if (aborted_) {
      return;
    }
    if (++expansions_ > limit_) {
      aborted_ = true;
      return;
    }
    if (depth == order_.size()) {
      // Remaining g2 nodes are insertions, with every edge touching them.
      std::size_t extra = 0;
      for (std::size_t v = 0; v < g2_.num_nodes(); ++v) {
        extra += !used_[v];
      }
      for (const auto &[a, b] : g2_.edges()) {
        extra += !(used_[a] && used_[b]);
      }
      best_ = std::min(best_, cost + extra);
      return;
    }
    if (cost + bound(depth) >= best_) {
      return;
    }
    const std::size_t u = order_[depth];
    std::vector<std::pair<std::size_t, std::optional<std::size_t>>> options;
    for (std::size_t v = 0; v < g2_.num_nodes(); ++v) {
      if (!used_[v]) {
        options.emplace_back(step_cost(u, v), v);
      }
    }
    options.emplace_back(step_cost(u, std::nullopt), std::nullopt);
    std::stable_sort(options.begin(), options.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });
    for (const auto &[c, image] : options) {
      if (cost + c >= best_) {
        continue;
      }
      map_[u] = image;
      assigned_[u] = true;
      if (image) {
        used_[*image] = true;
      }
      recurse(depth + 1, cost + c);
      if (image) {
        used_[*image] = false;
      }
      assigned_[u] = false;
      map_[u].reset();
    }
  }

  const CircuitDag &g1_;
  const CircuitDag &g2_;
  std::size_t best_;
  std::uint64_t limit_;
  std::uint64_t expansions_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> order_;
  std::vector<std::optional<std::size_t>> map_;
  std::vector<bool> assigned_;
  std::vector<bool> used_;
};

std::vector<std::optional<std::size_t>> greedy_mapping(const CircuitDag &g1, const CircuitDag &g2) {
  std::map<GateKind, std::vector<std::size_t>> by_label;
  for (std::size_t v = g2.num_nodes(); v-- > 0;) {
    by_label[g2.label(v)].push_back(v);
  }
  std::vector<std::optional<std::size_t>> mapping(g1.num_nodes());
  std::vector<bool> used(g2.num_nodes(), false);
  std::vector<std::size_t> leftover;
  for (std::size_t u = 0; u < g1.num_nodes(); ++u) {
    auto &pool = by_label[g1.label(u)];
    if (!pool.empty()) {
      mapping[u] = pool.back();
      used[pool.back()] = true;
      pool.pop_back();
    } else {
      leftover.push_back(u);
    }
  }
  std::size_t next = 0;
  for (std::size_t u : leftover) {
    while (next < used.size() && used[next]) {
      ++next;
    }
    if (next == used.size()) {
      break;
    }
    mapping[u] = next;
    used[next] = true;
  }
  return mapping;
}

/// Levenshtein alignment of the label sequences in node order; aligned pairs
/// (matches and substitutions) become the mapping.
std::optional<std::vector<std::optional<std::size_t>>> alignment_mapping(const CircuitDag &g1,
                                                                        const CircuitDag &g2) {
  constexpr std::size_t kMaxCells = 40'000'000;
  const std::size_t n = g1.num_nodes();
  const std::size_t m = g2.num_nodes();
  if ((n + 1) * (m + 1) > kMaxCells || n >= 65535 || m >= 65535) {
    return std::nullopt;
  }
  const std::size_t w = m + 1;
  std::vector<std::uint16_t> d((n + 1) * w);
  for (std::size_t j = 0; j <= m; ++j) {
    d[j] = static_cast<std::uint16_t>(j);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    d[i * w] = static_cast<std::uint16_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = d[(i - 1) * w + j - 1] + (g1.label(i - 1) != g2.label(j - 1));
      const std::size_t del = d[(i - 1) * w + j] + 1u;
      const std::size_t ins = d[i * w + j - 1] + 1u;
      d[i * w + j] = static_cast<std::uint16_t>(std::min({sub, del, ins}));
    }
  }
  std::vector<std::optional<std::size_t>> mapping(n);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 && j > 0) {
    const std::size_t here = d[i * w + j];
    if (here == d[(i - 1) * w + j - 1] + (g1.label(i - 1) != g2.label(j - 1))) {
      mapping[i - 1] = j - 1;
      --i;
      --j;
    } else if (here == d[(i - 1) * w + j] + 1u) {
      --i;
    } else {
      --j;
    }
  }
  return mapping;
}

}  // namespace

std::string_view ged_mode_name(GedMode mode) { return mode == GedMode::Exact ? "exact" : "bounded"; }

std::size_t mapping_cost(const CircuitDag &g1, const CircuitDag &g2,
                         const std::vector<std::optional<std::size_t>> &mapping) {
  std::size_t cost = 0;
  std::vector<bool> used(g2.num_nodes(), false);
  for (std::size_t u = 0; u < g1.num_nodes(); ++u) {
    if (!mapping[u]) {
      cost += 1;
      continue;
    }
    used[*mapping[u]] = true;
    cost += g1.label(u) != g2.label(*mapping[u]);
  }
  for (std::size_t v = 0; v < g2.num_nodes(); ++v) {
    cost += !used[v];
  }
  std::size_t kept = 0;
  for (const auto &[a, b] : g1.edges()) {
    if (mapping[a] && mapping[b] && g2.has_edge(*mapping[a], *mapping[b])) {
      ++kept;
    }
  }
  return cost + (g1.num_edges() - kept) + (g2.num_edges() - kept);
}

std::size_t ged_lower_bound(const CircuitDag &g1, const CircuitDag &g2) {
  const std::size_t nodes = std::max(g1.num_nodes(), g2.num_nodes()) - label_common(g1.labels(), g2.labels());
  return nodes + absdiff(g1.num_edges(), g2.num_edges());
}

std::size_t ged_greedy_upper_bound(const CircuitDag &g1, const CircuitDag &g2) {
  std::size_t best = mapping_cost(g1, g2, greedy_mapping(g1, g2));
  if (const auto aligned = alignment_mapping(g1, g2)) {
    best = std::min(best, mapping_cost(g1, g2, *aligned));
  }
  return best;
}

GedResult norm_ged(const CircuitDag &g1, const CircuitDag &g2, std::size_t budget, std::uint64_t expansion_limit) {
  GedResult r;
  r.denominator = static_cast<double>(std::max(g1.num_nodes(), g2.num_nodes()) +
                                      std::max(g1.num_edges(), g2.num_edges()));
  const std::size_t lower = ged_lower_bound(g1, g2);
  const std::size_t upper = ged_greedy_upper_bound(g1, g2);
  if (g1.num_nodes() <= budget && g2.num_nodes() <= budget) {
    Search search(g1, g2, upper + 1, expansion_limit);
    if (search.run()) {
      r.mode = GedMode::Exact;
      r.distance = r.lower = r.upper = static_cast<double>(std::min(search.best(), upper));
      return r;
    }
  }
  r.mode = GedMode::Bounded;
  r.lower = static_cast<double>(lower);
  r.upper = static_cast<double>(upper);
  r.distance = (r.lower + r.upper) / 2.0;
  return r;
}

}  // namespace qobf
