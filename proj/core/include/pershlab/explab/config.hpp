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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pershlab/events.hpp"
#include "pershlab/spectral/measure.hpp"
#include "pershlab/spectral/multiplier.hpp"

namespace pershlab::explab {

enum class ExperimentKind {
    exponent_curve,
    level_sweep,
    delta_sweep,
    tv_perturbation,
    singular_indifference,
    smoothing,
    counterexample,
    fold_report,
    verify_inequalities,
};

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& text);
std::vector<std::string> experiment_names();

struct Tolerances {
    double confidence_z = 1.959964;
    double origin_finite_tolerance = 0.01;
    double origin_blowup_factor = 10.0;
};

/// Declarative experiment description; see docs/config_schema.md. Keys
/// that an experiment does not use are accepted only if they are known.
struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::exponent_curve;
    std::optional<spectral::SpectralMeasure> measure;
    std::optional<spectral::SpectralMeasure> perturbation;
    EventKind event = EventKind::persistence;
    std::vector<double> levels{0.0};
    std::vector<double> horizons;
    double delta = 1.0 / 64.0;
    std::vector<double> deltas;
    std::vector<double> epsilons;
    std::size_t n_paths = 1000000;
    std::uint64_t seed = 1;
    double fejer_width = 2.0;
    std::optional<spectral::Multiplier> multiplier;
    double a = 1.0; // counterexample parameters
    double b = 3.0;
    double beta = 1.0;
    std::vector<double> origin_grid;
    std::filesystem::path out_dir = "results";
    std::string stem;
    Tolerances tolerances;
    bool inject_failure = false;

    /// Canonical document the config was parsed from (measure file
    /// references already resolved).
    nlohmann::json document;

    /// FNV-1a 64 over the canonical dump, as 16 hex digits. Key order in
    /// the source file does not matter.
    std::string hash() const;
};

/// `base_dir` resolves relative measure file references. Throws
/// ArgumentError naming the offending field.
ExperimentConfig config_from_json(const nlohmann::json& doc,
                                  const std::filesystem::path& base_dir = {});

/// Reads and parses a config file; JSON syntax errors report the line.
ExperimentConfig load_config(const std::filesystem::path& file);

std::string fnv1a64_hex(const std::string& text);

} // namespace pershlab::explab
