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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qobf/circuit.hpp"
#include "qobf/pathsum.hpp"

namespace qobf {

enum class EquivMode { Canonical, Sampled };

std::string_view equiv_mode_name(EquivMode mode);

enum class WitnessKind {
  /// Different input counts.
  WidthMismatch,
  /// Different numbers of path variables.
  PathCountMismatch,
  /// An assignment where the output forms differ.
  OutputMismatch,
  /// An assignment where the phase polynomials differ.
  PhaseMismatch,
};

std::string_view witness_kind_name(WitnessKind kind);

struct Witness {
  WitnessKind kind = WitnessKind::OutputMismatch;
  /// Assignment bits, character i is variable i. Empty for structural kinds.
  std::string x;
  std::string y;
  std::string detail;
};

struct EquivVerdict {
  bool equal = true;
  EquivMode mode = EquivMode::Canonical;
  std::size_t samples_used = 0;
  std::optional<Witness> witness;
};

/// Exact comparison: n, m, output forms and phase coefficients mod 1; the
/// global phase is ignored.
EquivVerdict pathsum_canonical_equal(const PathSum &p, const PathSum &q);

/// Randomized comparison at `samples` uniform points of {0,1}^{n+m}.
EquivVerdict ptd_equivalent(const PathSum &p, const PathSum &q, std::size_t samples, std::uint64_t seed);

/// Deletes or rekinds ceil(ratio * size) distinct gates. Replacement kinds
/// keep the arity and never equal the original up to global phase.
Circuit mutate_circuit(const Circuit &circuit, double ratio, std::uint64_t seed);

inline constexpr std::size_t kDefaultPtdSamples = 64;

struct PositiveNegativeReport {
  EquivVerdict positive;
  EquivVerdict negative;
  double positive_ms = 0.0;
  double negative_ms = 0.0;
  /// The Fake_QC compared in the negative test.
  Circuit mutated{1};
  /// The negative verdict came from a canonical re-check after a sampled miss.
  bool canonical_fallback = false;

  bool passed() const { return positive.equal && !negative.equal; }
};

/// Positive: reference vs obfuscated, expected equal. Negative: reference vs
/// mutate_circuit(obfuscated), expected unequal. Each timing covers both
/// path-sum constructions and the comparison.
PositiveNegativeReport positive_negative_test(const Circuit &reference, const Circuit &obfuscated, double ratio,
                                              std::size_t samples, std::uint64_t seed,
                                              EquivMode mode = EquivMode::Sampled);

/// positive_negative_test in sampled mode; an undetected mutant is re-checked
/// in canonical mode, which always gives a definite verdict.
PositiveNegativeReport verify_with_fallback(const Circuit &reference, const Circuit &obfuscated, double ratio,
                                            std::size_t samples, std::uint64_t seed);

}  // namespace qobf
