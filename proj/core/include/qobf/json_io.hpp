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

// JSON encodings of keys, counts, duration tables, verdicts and reports.

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qobf/counts.hpp"
#include "qobf/decoupling.hpp"
#include "qobf/equivalence.hpp"
#include "qobf/metrics.hpp"
#include "qobf/qcoo.hpp"
#include "qobf/schedule.hpp"

namespace qobf {

using Json = nlohmann::ordered_json;

/// {"a": "101", "b": "010"}, qubit 0 leftmost.
Json key_to_json(const PauliKey &key);
PauliKey key_from_json(const Json &j);

/// {"<bits>": count, ..., "_shots": N}. Keys starting with '_' other than
/// "_shots" are metadata and ignored on read; "_shots" must match the sum.
Json counts_to_json(const Counts &counts);
Counts counts_from_json(const Json &j);
Json distribution_to_json(const Distribution &dist);

/// {"x": 30, "cx": 60, ...}; names are case-insensitive on read.
Json durations_to_json(const DurationTable &table);
DurationTable durations_from_json(const Json &j);

Json verdict_to_json(const EquivVerdict &verdict);
Json positive_negative_to_json(const PositiveNegativeReport &report);
Json ged_to_json(const GedResult &ged);
Json report_to_json(const ObfuscationReport &report);
Json replacement_log_to_json(const std::vector<Replacement> &log);
Json insertion_log_to_json(const std::vector<InsertionRecord> &log);

Json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const Json &j);
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

}  // namespace qobf
