// Copyright 2026 The posmap Authors
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

// JSON and CSV serialization.
//
//   state:  {"d1", "d2", "re": [[...]], "im": [[...]]}
//   choi:   {"d_in", "d_out", "re", "im", "convention": "in_out"}
//   report: {"value", "converged", "restarts_used", "upper_bound", "certificate"?}
//
// Readers throw InvalidArgument on malformed input. Doubles are written in
// shortest round-trip form, independent of the locale.

#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "posmap/dynamics.hpp"
#include "posmap/maps.hpp"
#include "posmap/measures.hpp"
#include "posmap/states.hpp"

namespace posmap {

using Json = nlohmann::json;

Json matrix_to_json(const ComplexMatrix& m);  // {"re", "im"}
ComplexMatrix matrix_from_json(const Json& j);

Json state_to_json(const DensityMatrix& state);
DensityMatrix state_from_json(const Json& j);

Json choi_to_json(const ChoiMatrix& choi);
ChoiMatrix choi_from_json(const Json& j);

/// Ensembles become {"type": "ensemble", "weights", "components"}, vectors
/// {"type": "vector", "re", "im"}.
Json certificate_to_json(const Certificate& certificate);
Json report_to_json(const MeasureReport& report);

/// Array of {"t", "min_eig", "negativity", "eof_upper", "dcoef_sup",
/// "trace"}; undefined entries are null.
Json track_to_json(const TrackRecord& record);
/// Header t,min_eig,negativity,eof_upper,dcoef_sup,trace; undefined cells
/// are empty.
std::string track_to_csv(const TrackRecord& record);

/// Shortest representation that round-trips, '.' decimal point.
std::string format_double(double x);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace posmap
