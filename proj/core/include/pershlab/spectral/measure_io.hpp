/*
   Copyright 2026 The pershlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "pershlab/spectral/measure.hpp"

namespace pershlab::spectral {

/// Parses a measure document (see docs/measure_schema.md). Unknown keys and
/// invalid values raise ArgumentError naming the offending field. A string
/// value is accepted as the name of a builtin measure.
SpectralMeasure measure_from_json(const nlohmann::json& doc);

nlohmann::json measure_to_json(const SpectralMeasure& measure);

SpectralMeasure load_measure(const std::filesystem::path& path);
void save_measure(const std::filesystem::path& path, const SpectralMeasure& measure);

/// Summary used by `pershlab measure show`: mass, support radius, a few
/// covariance values and the origin classification.
nlohmann::json describe_measure(const SpectralMeasure& measure);

} // namespace pershlab::spectral
