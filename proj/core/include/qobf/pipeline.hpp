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

// End-to-end pipeline: encrypt -> obfuscate -> verify -> simulate -> metrics.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qobf/circuit.hpp"
#include "qobf/circuit_library.hpp"
#include "qobf/decoupling.hpp"
#include "qobf/equivalence.hpp"
#include "qobf/json_io.hpp"
#include "qobf/metrics.hpp"
#include "qobf/qcoo.hpp"
#include "qobf/schedule.hpp"

namespace qobf {

inline constexpr double kMinMutationRatio = 0.05;
inline constexpr double kMaxMutationRatio = 0.15;

struct PipelineConfig {
  std::uint64_t seed = 0;
  bool lambda = true;
  DurationTable durations = DurationTable::defaults();
  std::size_t samples = kDefaultPtdSamples;
  double ratio = 0.10;
  /// Allows a mutation ratio outside [0.05, 0.15].
  bool ratio_override = false;
  std::uint64_t shots = 10000;
  std::size_t cap = 16;
  std::size_t repeats = 10;
  std::size_t random_count = 20;
  /// Worker threads for bench; 0 picks the hardware concurrency.
  std::size_t workers = 0;

  /// Throws Error on an out-of-range field.
  void validate() const;
};

/// Reads a JSON config. "durations" may be an object or a path resolved
/// relative to the config file.
PipelineConfig load_config(const std::filesystem::path &path);
PipelineConfig config_from_json(const Json &j, const std::filesystem::path &base_dir = {});
Json config_to_json(const PipelineConfig &config);

struct PipelineResult {
  EncryptionResult encryption;
  DecouplingResult decoupling;
  PositiveNegativeReport verification;
  /// Canonical-mode positive check (exact).
  EquivVerdict canonical_positive;
  ObfuscationReport report;
  /// Set when the circuit fits under the simulator cap.
  bool simulated = false;
  /// Decrypted exact distribution of prefix+obfuscated equals the plaintext
  /// distribution to 1e-9.
  std::optional<bool> decrypt_ok;
  /// TVD between plaintext and encrypted counts averaged over repeats.
  std::optional<double> mean_tvd;
  std::optional<double> exact_tvd;
  /// Pre/post-ADOA fidelity on the encrypted circuit.
  std::optional<double> adoa_fidelity;
};

/// Runs every stage for one circuit. `ek` overrides the generated key.
PipelineResult run_pipeline(const Circuit &circuit, const PipelineConfig &config,
                            const std::optional<PauliKey> &ek = std::nullopt);

struct BenchRow {
  std::string name;
  std::size_t qubits = 0;
  PipelineResult result;
};

struct BenchResult {
  std::string suite;
  std::vector<BenchRow> rows;
};

/// Runs the pipeline over a suite with a worker pool; rows keep suite order.
BenchResult run_bench(const std::string &suite, const PipelineConfig &config);

/// Deterministic plot-ready table (no timings).
std::string bench_csv(const BenchResult &bench);
/// Summary with timings, pass rates, means and the published reference
/// averages (reported only).
Json bench_summary(const BenchResult &bench, const PipelineConfig &config);

}  // namespace qobf
