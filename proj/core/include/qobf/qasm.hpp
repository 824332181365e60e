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

#include <string>
#include <string_view>

#include "qobf/circuit.hpp"

namespace qobf {

/// Parses the QASM-2 subset: header, one qreg, any cregs, the twelve gate
/// mnemonics (x y z h s sdg t tdg rz u3 cx cz) and terminal `measure`.
/// Angle expressions may use pi, integers, decimals, + - * / and parentheses.
///
/// Throws ParseError (with line/column) on malformed input, unsupported
/// gates, and measurements followed by a gate on the same qubit.
Circuit parse_qasm(std::string_view text);

/// Serializes a circuit. Each line of `header_comment` becomes a `//` comment
/// after the include line. Dyadic angles print as multiples of pi.
std::string emit_qasm(const Circuit &circuit, std::string_view header_comment = {});

}  // namespace qobf
