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

#include "pershlab/estimator/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pershlab/error.hpp"

namespace pershlab::estimator {

namespace {

double exponent(double p, double horizon)
{
    if (p >= 1.0) {
        return 0.0;
    }
    if (p <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return -std::log(p) / horizon;
}

} // namespace

std::string to_string(EstimateKind kind)
{
    switch (kind) {
    case EstimateKind::persistence:
        return "persistence";
    case EstimateKind::ball:
        return "ball";
    case EstimateKind::persistence_sampled:
        return "persistence_sampled";
    case EstimateKind::ball_sampled:
        return "ball_sampled";
    }
    return {};
}

EstimateKind parse_estimate_kind(const std::string& text)
{
    for (auto k : {EstimateKind::persistence, EstimateKind::ball, EstimateKind::persistence_sampled,
                   EstimateKind::ball_sampled}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw ArgumentError("unknown estimate kind '" + text + "'");
}

EventKind event_of(EstimateKind kind)
{
    return kind == EstimateKind::persistence || kind == EstimateKind::persistence_sampled
               ? EventKind::persistence
               : EventKind::ball;
}

double ExponentEstimate::standard_error() const
{
    return 0.5 * (ci_hi - ci_lo) / 1.96;
}

bool ExponentEstimate::has_flag(const std::string& flag) const
{
    return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

ExponentEstimate make_estimate(EstimateKind kind, std::size_t hits, std::size_t n_paths,
                               double horizon, double level, double delta, std::uint64_t seed,
                               double z)
{
    if (n_paths == 0 || hits > n_paths) {
        throw ArgumentError("estimate: need 0 <= hits <= n_paths and n_paths > 0");
    }
    if (!(horizon >= 0.0)) {
        throw ArgumentError("estimate: horizon must be nonnegative");
    }
    ExponentEstimate e;
    e.kind = kind;
    e.horizon = horizon;
    e.level = level;
    e.delta = delta;
    e.hits = hits;
    e.n_paths = n_paths;
    e.seed = seed;
    const double n = static_cast<double>(n_paths);
    if (hits == 0) {
        e.p_hat = 0.0;
        e.ci_lo = 0.0;
        e.ci_hi = std::min(1.0, 3.0 / n);
        e.flags.emplace_back("zero_hits");
    } else {
        e.p_hat = static_cast<double>(hits) / n;
        const Interval ci = wilson_interval(hits, n_paths, z);
        e.ci_lo = ci.lo;
        e.ci_hi = ci.hi;
    }
    if (horizon == 0.0) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        e.theta_hat = e.theta_lo = e.theta_hi = nan;
        return e;
    }
    if (hits == 0) {
        e.theta_hat = exponent(e.ci_hi, horizon);
        e.theta_lo = e.theta_hat;
        e.theta_hi = std::numeric_limits<double>::infinity();
        e.flags.emplace_back("theta_lower_bound");
        return e;
    }
    e.theta_hat = exponent(e.p_hat, horizon);
    e.theta_lo = exponent(e.ci_hi, horizon);
    e.theta_hi = exponent(e.ci_lo, horizon);
    return e;
}

} // namespace pershlab::estimator
