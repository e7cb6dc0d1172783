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
#include <string>
#include <vector>

#include "pershlab/estimator/wilson.hpp"
#include "pershlab/events.hpp"

namespace pershlab::estimator {

enum class EstimateKind { persistence, ball, persistence_sampled, ball_sampled };

std::string to_string(EstimateKind kind);
EstimateKind parse_estimate_kind(const std::string& text);
EventKind event_of(EstimateKind kind);

/// Probability estimate for one (kind, level, horizon) with a Wilson
/// interval and the implied exponent -log(p) / T.
///
/// With zero hits p_hat is 0, the interval is [0, 3 / n] and theta_hat is
/// the certified lower bound -log(3 / n) / T (flag "zero_hits"). At T = 0
/// the exponent fields are NaN.
struct ExponentEstimate {
    EstimateKind kind = EstimateKind::persistence;
    double horizon = 0.0;
    double level = 0.0;
    double delta = 0.0;
    std::size_t hits = 0;
    std::size_t n_paths = 0;
    double p_hat = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double theta_hat = 0.0;
    double theta_lo = 0.0;
    double theta_hi = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> flags;

    bool zero_hits() const { return hits == 0; }

    /// Wilson half-width divided by 1.96.
    double standard_error() const;

    bool has_flag(const std::string& flag) const;
};

ExponentEstimate make_estimate(EstimateKind kind, std::size_t hits, std::size_t n_paths,
                               double horizon, double level, double delta, std::uint64_t seed,
                               double z = kZ95);

} // namespace pershlab::estimator
