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

#include "qobf/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qobf/error.hpp"

namespace qobf {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string gate_list(const std::vector<GateKind> &kinds) {
  std::string s;
  for (GateKind k : kinds) {
    s += s.empty() ? "" : ",";
    s += gate_name(k);
  }
  return s;
}

}  // namespace

Json key_to_json(const PauliKey &key) { return Json{{"a", key.a_string()}, {"b", key.b_string()}}; }

PauliKey key_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_string() || !j["b"].is_string()) {
    throw Error("key JSON needs string fields \"a\" and \"b\"");
  }
  return PauliKey::from_strings(j["a"].get<std::string>(), j["b"].get<std::string>());
}

Json counts_to_json(const Counts &counts) {
  Json j = Json::object();
  for (const auto &[bits, n] : counts.counts) {
    j[bits] = n;
  }
  j["_shots"] = counts.shots();
  return j;
}

Counts counts_from_json(const Json &j) {
  if (!j.is_object()) {
    throw Error("counts JSON must be an object");
  }
  Counts c;
  std::optional<std::uint64_t> declared;
  std::optional<std::size_t> width;
  for (const auto &[key, value] : j.items()) {
    if (key == "_shots") {
      declared = value.get<std::uint64_t>();
      continue;
    }
    if (!key.empty() && key.front() == '_') {
      continue;
    }
    if (key.find_first_not_of("01") != std::string::npos) {
      throw Error("counts key '" + key + "' is not a bitstring");
    }
    if (width && *width != key.size()) {
      throw WidthMismatchError("counts keys have different lengths");
    }
    width = key.size();
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
      throw Error("count for '" + key + "' must be a non-negative integer");
    }
    c.counts[key] = value.get<std::uint64_t>();
  }
  if (declared && *declared != c.shots()) {
    throw Error("\"_shots\" is " + std::to_string(*declared) + " but counts sum to " + std::to_string(c.shots()));
  }
  return c;
}

Json distribution_to_json(const Distribution &dist) {
  Json j = Json::object();
  for (const auto &[bits, p] : dist) {
    j[bits] = p;
  }
  return j;
}

Json durations_to_json(const DurationTable &table) {
  Json j = Json::object();
  for (const auto &[kind, ns] : table.entries()) {
    j[std::string(gate_name(kind))] = ns;
  }
  return j;
}

DurationTable durations_from_json(const Json &j) {
  if (!j.is_object()) {
    throw Error("duration table JSON must be an object");
  }
  DurationTable t;
  for (const auto &[key, value] : j.items()) {
    const auto kind = gate_kind_from_name(lower(key));
    if (!kind) {
      throw UnsupportedGateError("unknown gate '" + key + "' in duration table");
    }
    if (!value.is_number()) {
      throw Error("duration for '" + key + "' must be a number");
    }
    t.set(*kind, value.get<double>());
  }
  return t;
}

Json verdict_to_json(const EquivVerdict &v) {
  Json j{{"equal", v.equal}, {"mode", equiv_mode_name(v.mode)}, {"samples_used", v.samples_used}};
  if (v.witness) {
    j["witness"] = Json{{"kind", witness_kind_name(v.witness->kind)},
                        {"x", v.witness->x},
                        {"y", v.witness->y},
                        {"detail", v.witness->detail}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json positive_negative_to_json(const PositiveNegativeReport &r) {
  return Json{{"passed", r.passed()},
              {"positive", verdict_to_json(r.positive)},
              {"negative", verdict_to_json(r.negative)},
              {"positive_ms", r.positive_ms},
              {"negative_ms", r.negative_ms},
              {"mutated_gate_count", r.mutated.size()}};
}

Json ged_to_json(const GedResult &g) {
  return Json{{"mode", ged_mode_name(g.mode)},   {"norm_ged", g.normalized()},
              {"lower", g.normalized_lower()},   {"upper", g.normalized_upper()},
              {"distance", g.distance},          {"denominator", g.denominator}};
}

Json report_to_json(const ObfuscationReport &r) {
  Json j;
  j["tvd"] = r.tvd ? Json(*r.tvd) : Json(nullptr);
  j["norm_ged"] = ged_to_json(r.ged);
  j["depth_before"] = r.depth_before;
  j["depth_after"] = r.depth_after;
  j["duration_before_ns"] = r.duration_before;
  j["duration_after_ns"] = r.duration_after;
  j["gate_count_before"] = r.gate_count_before;
  j["gate_count_after"] = r.gate_count_after;
  j["fidelity"] = r.fidelity ? Json(*r.fidelity) : Json(nullptr);
  return j;
}

Json replacement_log_to_json(const std::vector<Replacement> &log) {
  Json j = Json::array();
  for (const auto &r : log) {
    j.push_back(Json{{"uid", r.uid}, {"original", gate_name(r.original)}, {"angle", r.sign > 0 ? "pi/4" : "-pi/4"}});
  }
  return j;
}

Json insertion_log_to_json(const std::vector<InsertionRecord> &log) {
  Json j = Json::array();
  for (const auto &r : log) {
    Json row{{"qubit", r.qubit},
             {"window_start_ns", r.window_start},
             {"window_end_ns", r.window_end},
             {"sequence", dd_kind_name(r.kind)},
             {"pulses", gate_list(r.pulses)},
             {"pulse_times_ns", r.pulse_times},
             {"inserted_uids", r.inserted_uids}};
    row["merged_uid"] = r.merged_uid ? Json(*r.merged_uid) : Json(nullptr);
    j.push_back(std::move(row));
  }
  return j;
}

Json read_json_file(const std::filesystem::path &path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path &path, const Json &j) { write_text_file(path, j.dump(2) + "\n"); }

std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  out << text;
}

}  // namespace qobf
