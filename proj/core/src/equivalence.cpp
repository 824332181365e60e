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

#include "qobf/equivalence.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "qobf/error.hpp"
#include "qobf/seed.hpp"

namespace qobf {

namespace {

void split_assignment(const std::vector<std::uint8_t> &bits, std::size_t n, Witness &w) {
  w.x.clear();
  w.y.clear();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    (i < n ? w.x : w.y) += bits[i] ? '1' : '0';
  }
}

EquivVerdict structural(const PathSum &p, const PathSum &q, EquivMode mode) {
  EquivVerdict v;
  v.mode = mode;
  if (p.num_inputs() != q.num_inputs()) {
    v.equal = false;
    v.witness = Witness{WitnessKind::WidthMismatch, "", "",
                        "input counts " + std::to_string(p.num_inputs()) + " vs " + std::to_string(q.num_inputs())};
  } else if (p.num_paths() != q.num_paths()) {
    v.equal = false;
    v.witness = Witness{WitnessKind::PathCountMismatch, "", "",
                        "path variable counts " + std::to_string(p.num_paths()) + " vs " +
                            std::to_string(q.num_paths())};
  }
  return v;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

EquivVerdict compare(const PathSum &p, const PathSum &q, EquivMode mode, std::size_t samples, std::uint64_t seed) {
  return mode == EquivMode::Canonical ? pathsum_canonical_equal(p, q) : ptd_equivalent(p, q, samples, seed);
}

}  // namespace

std::string_view equiv_mode_name(EquivMode mode) { return mode == EquivMode::Canonical ? "canonical" : "sampled"; }

std::string_view witness_kind_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::WidthMismatch:
      return "width_mismatch";
    case WitnessKind::PathCountMismatch:
      return "path_count_mismatch";
    case WitnessKind::OutputMismatch:
      return "output_mismatch";
    case WitnessKind::PhaseMismatch:
      return "phase_mismatch";
  }
  return "output_mismatch";
}

EquivVerdict pathsum_canonical_equal(const PathSum &p, const PathSum &q) {
  EquivVerdict v = structural(p, q, EquivMode::Canonical);
  if (!v.equal) {
    return v;
  }
  const std::size_t n = p.num_inputs();
  std::vector<std::uint8_t> bits(p.num_vars(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (p.outputs()[k] == q.outputs()[k]) {
      continue;
    }
    const AffineForm d = xor_forms(p.outputs()[k], q.outputs()[k]);
    if (!d.constant) {
      bits[d.vars.front()] = 1;
    }
    Witness w;
    w.kind = WitnessKind::OutputMismatch;
    w.detail = "output " + std::to_string(k) + ": " + p.outputs()[k].to_string(n) + " vs " +
               q.outputs()[k].to_string(n);
    split_assignment(bits, n, w);
    v.equal = false;
    v.witness = std::move(w);
    return v;
  }

  std::optional<std::pair<std::size_t, Monomial>> best;
  auto consider = [&](Monomial m) {
    if (p.coefficient(m) == q.coefficient(m)) {
      return;
    }
    const std::pair<std::size_t, Monomial> key{monomial_degree(m), m};
    if (!best || key < *best) {
      best = key;
    }
  };
  for (const auto &[m, c] : p.phase()) {
    consider(m);
  }
  for (const auto &[m, c] : q.phase()) {
    consider(m);
  }
  if (best) {
    for (Var x : monomial_vars(best->second)) {
      bits[x] = 1;
    }
    Witness w;
    w.kind = WitnessKind::PhaseMismatch;
    w.detail = "phase " + std::to_string(p.evaluate_phase(bits)) + "/8 vs " + std::to_string(q.evaluate_phase(bits)) +
               "/8";
    split_assignment(bits, n, w);
    v.equal = false;
    v.witness = std::move(w);
  }
  return v;
}

EquivVerdict ptd_equivalent(const PathSum &p, const PathSum &q, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) {
    throw Error("PTD needs at least one sample");
  }
  EquivVerdict v = structural(p, q, EquivMode::Sampled);
  if (!v.equal) {
    return v;
  }
  const std::size_t n = p.num_inputs();
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bits(p.num_vars());
  for (std::size_t s = 0; s < samples; ++s) {
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (i % 64 == 0) {
        word = rng();
      }
      bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
    }
    v.samples_used = s + 1;
    const auto fp = p.evaluate_outputs(bits);
    const auto fq = q.evaluate_outputs(bits);
    const int php = p.evaluate_phase(bits);
    const int phq = q.evaluate_phase(bits);
    if (fp != fq || php != phq) {
      Witness w;
      w.kind = fp != fq ? WitnessKind::OutputMismatch : WitnessKind::PhaseMismatch;
      w.detail = fp != fq ? "output forms differ at sample " + std::to_string(s)
                          : "phase " + std::to_string(php) + "/8 vs " + std::to_string(phq) + "/8";
      split_assignment(bits, n, w);
      v.equal = false;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

Circuit mutate_circuit(const Circuit &circuit, double ratio, std::uint64_t seed) {
  if (circuit.empty()) {
    throw Error("cannot mutate an empty circuit");
  }
  if (!(ratio > 0.0) || ratio > 1.0) {
    throw Error("mutation ratio must be in (0, 1]");
  }
  const std::size_t total = circuit.size();
  const auto touched = std::min<std::size_t>(
      total, std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ratio * static_cast<double>(total) - 1e-9))));

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < touched; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, total - 1);
    std::swap(order[i], order[pick(rng)]);
  }

  // nullopt = delete.
  std::vector<std::optional<Gate>> slots(circuit.gates().begin(), circuit.gates().end());
  constexpr GateKind kSingle[] = {GateKind::X, GateKind::Y,   GateKind::Z, GateKind::H,
                                  GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg};
  for (std::size_t i = 0; i < touched; ++i) {
    const std::size_t idx = order[i];
    const Gate &g = circuit[idx];
    if (rng() & 1u) {
      slots[idx].reset();
      continue;
    }
    Gate r = g;
    r.params.clear();
    if (g.is_single_qubit()) {
      const Matrix2 current = single_qubit_matrix(g);
      std::vector<GateKind> choices;
      for (GateKind k : kSingle) {
        if (!equal_up_to_global_phase(single_qubit_matrix(k), current, 1e-9)) {
          choices.push_back(k);
        }
      }
      std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
      r.kind = choices[pick(rng)];
    } else {
      r.kind = g.kind == GateKind::CX ? GateKind::CZ : GateKind::CX;
    }
    slots[idx] = std::move(r);
  }

  Circuit out(circuit.num_qubits());
  for (auto &slot : slots) {
    if (slot) {
      out.append(std::move(*slot));
    }
  }
  out.set_measured(circuit.measured());
  return out;
}

PositiveNegativeReport positive_negative_test(const Circuit &reference, const Circuit &obfuscated, double ratio,
                                              std::size_t samples, std::uint64_t seed, EquivMode mode) {
  PositiveNegativeReport report;
  auto start = std::chrono::steady_clock::now();
  {
    const PathSum ref = circuit_to_pathsum(reference);
    const PathSum obf = circuit_to_pathsum(obfuscated);
    report.positive = compare(ref, obf, mode, samples, derive_seed(seed, "ptd-positive"));
  }
  report.positive_ms = elapsed_ms(start);

  start = std::chrono::steady_clock::now();
  {
    report.mutated = mutate_circuit(obfuscated, ratio, derive_seed(seed, "mutate"));
    const PathSum ref = circuit_to_pathsum(reference);
    const PathSum fake = circuit_to_pathsum(report.mutated);
    report.negative = compare(ref, fake, mode, samples, derive_seed(seed, "ptd-negative"));
  }
  report.negative_ms = elapsed_ms(start);
  return report;
}

PositiveNegativeReport verify_with_fallback(const Circuit &reference, const Circuit &obfuscated, double ratio,
                                            std::size_t samples, std::uint64_t seed) {
  PositiveNegativeReport report = positive_negative_test(reference, obfuscated, ratio, samples, seed);
  if (report.negative.equal) {
    const auto start = std::chrono::steady_clock::now();
    report.negative =
        pathsum_canonical_equal(circuit_to_pathsum(reference), circuit_to_pathsum(report.mutated));
    report.negative_ms += elapsed_ms(start);
    report.canonical_fallback = true;
  }
  return report;
}

}  // namespace qobf
