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
#include <ostream>
#include <vector>

#include "pershlab/explab/config.hpp"
#include "pershlab/explab/report.hpp"

namespace pershlab::explab {

/// Command-line overrides; each one is written back into the config
/// document so the report hash reflects what actually ran.
struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> n_paths;
    std::optional<std::filesystem::path> out_dir;
    bool plot = false;
};

void apply_overrides(ExperimentConfig& config, const RunOptions& options);

/// Runs the experiment and returns its report without writing files.
Report run_experiment(const ExperimentConfig& config);

struct RunOutcome {
    Report report;
    std::vector<std::filesystem::path> files;
    int exit_code = 0; // 0 all verdicts hold, 2 otherwise
};

/// Runs, writes <out>/<stem>.csv, .json and (with plot and rows) .svg, and
/// prints one line per verdict to `log`. Errors propagate as exceptions;
/// the CLI maps them to exit code 1.
RunOutcome run(ExperimentConfig config, const RunOptions& options, std::ostream& log);

} // namespace pershlab::explab
