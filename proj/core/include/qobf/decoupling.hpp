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

// Structure obfuscation by adaptive decoupling: idle windows are filled with
// pulse sequences whose product is the identity up to global phase.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qobf/circuit.hpp"
#include "qobf/schedule.hpp"

namespace qobf {

enum class DDKind { XY8, XY4, XX, ZZMerge, None };

std::string_view dd_kind_name(DDKind kind);

/// Pulse orders.
inline constexpr GateKind kXY8[] = {GateKind::X, GateKind::Y, GateKind::X, GateKind::Y,
                                    GateKind::Y, GateKind::X, GateKind::Y, GateKind::X};
inline constexpr GateKind kXY4[] = {GateKind::X, GateKind::Y, GateKind::X, GateKind::Y};
inline constexpr GateKind kXX[] = {GateKind::X, GateKind::X};

struct DDChoice {
  DDKind kind = DDKind::None;
  /// Explicit pulses (a single Z for ZZMerge; the other Z is merged).
  std::vector<GateKind> pulses;
  /// Pulse start offsets from the window start, evenly spaced.
  std::vector<double> offsets;
};

/// Longest sequence that fits strictly inside the window: XY8, then XY4, then
/// XX; otherwise ZZMerge when the window exceeds d(Z), a context gate exists
/// and `lambda` is set; otherwise None.
DDChoice select_sequence(double window_length, const DurationTable &durations, bool has_context, bool lambda);

enum class ZSide {
  /// Z applied before g: matrix g * Z.
  Before,
  /// Z applied after g: matrix Z * g.
  After,
};

/// U3 gate (same wire and uid as `g`) equal to the Z/g product up to global
/// phase. Angles within 1e-9 of a multiple of pi/16 are stored exactly.
Gate merge_z_u3(const Gate &g, ZSide side);

struct InsertionRecord {
  Qubit qubit = 0;
  double window_start = 0.0;
  double window_end = 0.0;
  DDKind kind = DDKind::None;
  std::vector<GateKind> pulses;
  /// Absolute pulse start times in the analog schedule.
  std::vector<double> pulse_times;
  std::vector<GateUid> inserted_uids;
  /// Context gate that absorbed a Z (ZZMerge only).
  std::optional<GateUid> merged_uid;
};

struct DecouplingResult {
  Circuit circuit{1};
  std::vector<InsertionRecord> log;
};

/// Fills every idle window of `circuit` (under `durations`) with the sequence
/// chosen by select_sequence. Pulses are serialized right after the gate
/// preceding the window, so re-scheduling never moves an original gate.
///
/// A context gate is eligible for ZZ merging only if its duration equals
/// d(U3), which keeps the makespan fixed. Windows that select None are logged.
/// The output does not depend on `seed`; it is recorded for replay.
DecouplingResult insert_dd(const Circuit &circuit, const DurationTable &durations, bool lambda, std::uint64_t seed);

}  // namespace qobf
