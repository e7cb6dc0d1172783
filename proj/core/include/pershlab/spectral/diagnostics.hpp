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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pershlab/spectral/measure.hpp"

namespace pershlab::spectral {

enum class OriginStatus { finite, divergent, oscillating };

std::string to_string(OriginStatus status);

struct OriginDensity {
    OriginStatus status = OriginStatus::finite;
    double value = 0.0;  // finite: last mass ratio
    double liminf = 0.0; // oscillating: min over the small-x half of the grid
    double limsup = 0.0; // oscillating: max over the same points
};

/// Thresholds for classifying the origin behaviour of the mass-ratio curve.
struct DiagnosticsOptions {
    // finite when the last three values agree to this relative spread
    double finite_tolerance = 0.01;
    // divergent when the curve is nondecreasing and ends above this multiple
    // of its median
    double blowup_factor = 10.0;
};

struct MeasureDiagnostics {
    std::vector<std::pair<double, double>> mass_ratio_curve; // (x, rho((-x, x)) / (2x))
    OriginDensity origin_density;
    double beta = 0.0;
    double log_moment = 0.0;
};

/// rho((-x, x)) / (2x), x > 0.
double mass_ratio(const SpectralMeasure& measure, double x);

OriginDensity classify_origin(std::span<const std::pair<double, double>> curve,
                              const DiagnosticsOptions& options = {});

/// Mass-ratio curve on x_grid classified by classify_origin.
OriginDensity origin_density(const SpectralMeasure& measure, std::span<const double> x_grid,
                             const DiagnosticsOptions& options = {});

/// integral over [0, inf) of max(|log l|^(1 + beta), 1) d rho. An atom at
/// the origin makes it infinite. Requires beta >= 0.
double log_moment(const SpectralMeasure& measure, double beta);

/// 4 points per decade from 1e-1 down to 1e-6.
std::vector<double> default_origin_grid();

/// x_grid must be nonempty, positive and strictly decreasing.
MeasureDiagnostics diagnostics(const SpectralMeasure& measure, double beta,
                               std::span<const double> x_grid,
                               const DiagnosticsOptions& options = {});

} // namespace pershlab::spectral
