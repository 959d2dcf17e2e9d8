// Copyright 2026 The qdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "qdeg/degradability.hpp"

namespace qdeg {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Shortest text with 17 significant digits; never locale dependent.
std::string format_double(double x);

/// Parses a decimal number or a fraction "p/q". Throws ParseError.
double parse_number(std::string_view text);

/// Matrices are arrays of rows; entries are [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json channel_to_json(const Channel& c);
Channel channel_from_json(const Json& j, const Tolerance& tol = {});

/// Builds a channel from a short description:
///   td:d=2,t=-2/3      transpose-depolarizing channel
///   depol:d=3,s=0.1    depolarizing channel
///   td-comp:t=0.25     literal complement of the qubit TD channel
///   cloner:p=0.5       qubit TD complement at the cloner's t(p)
///   id:d=2             identity channel
///   file:PATH          channel JSON as written by channel_to_json
Channel parse_channel_spec(std::string_view spec, const Tolerance& tol = {});

Json certificate_to_json(const SuperOp& map, Mode mode);
/// Throws ParseError on malformed documents.
SuperOp certificate_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json screen_to_json(const ScreenReport& r);

/// Reads and parses a JSON file. Throws ParseError.
Json read_json_file(const std::string& path);

}  // namespace qdeg
