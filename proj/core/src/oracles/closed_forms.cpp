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

#include "pershlab/oracles/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "pershlab/error.hpp"
#include "pershlab/oracles/gaussian.hpp"
#include "pershlab/oracles/quadrature.hpp"

namespace pershlab::oracles {

namespace {

constexpr double kPi = std::numbers::pi;

QuadratureOptions tight()
{
    QuadratureOptions o;
    o.abs_tol = 1e-14;
    o.rel_tol = 1e-13;
    return o;
}

} // namespace

double cosine_process_persistence(double level, double horizon)
{
    if (!(horizon >= 0.0) || !std::isfinite(level)) {
        throw ArgumentError("cosine_process_persistence: need finite level and horizon >= 0");
    }
    const double l2 = level * level;
    // E(a) = exp(-level^2 / (2 cos^2 a)) is the Rayleigh survival function at
    // radius |level / cos a|.
    const auto survival = [l2](double a) {
        const double c = std::cos(a);
        if (c == 0.0) {
            return 0.0;
        }
        return std::exp(-l2 / (2.0 * c * c));
    };

    if (level == 0.0) {
        return std::max(0.0, kPi - horizon) / (2.0 * kPi);
    }
    if (level > 0.0) {
        if (horizon >= kPi) {
            return 0.0;
        }
        return integrate(survival, 0.5 * horizon, 0.5 * kPi, tight()).value / kPi;
    }
    // Radii below |level| never reach the level.
    const double inside = -std::expm1(-0.5 * l2);
    if (horizon >= 2.0 * kPi) {
        return inside;
    }
    const double from = std::max(0.5 * kPi, 0.5 * horizon);
    const double tail = std::exp(-0.5 * l2);
    return inside + (2.0 * kPi - horizon) * tail / (2.0 * kPi)
        - integrate(survival, from, kPi, tight()).value / kPi;
}

double cosine_process_stays_below(double level, double horizon)
{
    if (!(horizon >= 0.0) || !std::isfinite(level)) {
        throw ArgumentError("cosine_process_stays_below: need finite level and horizon >= 0");
    }
    // For radius r, cos(t - phi) < level / r on a window of length
    // 2 pi - 2 acos(level / r); the phase has to fit [0, horizon] inside it.
    const auto window = [level, horizon](double r) {
        const double c = level / r;
        if (c >= 1.0) {
            return 1.0;
        }
        if (c <= -1.0) {
            return 0.0;
        }
        const double len = 2.0 * kPi - 2.0 * std::acos(c) - horizon;
        return std::max(0.0, len) / (2.0 * kPi);
    };
    const auto integrand = [&window](double r) { return window(r) * r * std::exp(-0.5 * r * r); };

    const double abs_level = std::abs(level);
    const double r_max = abs_level + 40.0;
    std::vector<double> breaks{abs_level};
    // window hits zero where acos(level / r) = pi - horizon / 2
    const double kink_cos = std::cos(kPi - 0.5 * horizon);
    if (horizon < 2.0 * kPi && kink_cos != 0.0) {
        const double r_kink = level / kink_cos;
        if (r_kink > 0.0) {
            breaks.push_back(r_kink);
        }
    }
    QuadratureOptions o = tight();
    o.abs_tol = 1e-13;
    o.max_depth = 50;
    return integrate(integrand, 0.0, r_max, o, breaks).value;
}

double iid_probability(double level, std::size_t n, EventKind kind)
{
    if (n == 0) {
        throw ArgumentError("iid_probability: need at least one point");
    }
    const double k = static_cast<double>(n);
    if (kind == EventKind::persistence) {
        return std::pow(normal_tail(level), k);
    }
    if (!(level > 0.0)) {
        throw ArgumentError("iid_probability: ball level must be positive");
    }
    return std::pow(normal_abs_within(level), k);
}

} // namespace pershlab::oracles
