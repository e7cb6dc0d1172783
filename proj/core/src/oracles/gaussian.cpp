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

#include "pershlab/oracles/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "pershlab/error.hpp"

namespace pershlab::oracles {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x * kInvSqrt2);
}

double normal_tail(double x)
{
    return 0.5 * std::erfc(x * kInvSqrt2);
}

double normal_abs_within(double x)
{
    if (x <= 0.0) {
        return 0.0;
    }
    return std::erf(x * kInvSqrt2);
}

double normal_pdf(double x)
{
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

TailBounds mills_tail_bounds(double x)
{
    if (!(x > 0.0)) {
        throw ArgumentError("mills_tail_bounds: x must be positive");
    }
    const double phi = normal_pdf(x);
    return {(1.0 / x - 1.0 / (x * x * x)) * phi, normal_tail(x), phi / x};
}

TailBounds exponential_tail_bounds(double x)
{
    if (!(x >= 2.0)) {
        throw ArgumentError("exponential_tail_bounds: requires x >= 2");
    }
    return {std::exp(-x * x), normal_tail(x), std::exp(-0.5 * x * x)};
}

TailBounds small_ball_bounds(double x)
{
    if (!(x > 0.0)) {
        throw ArgumentError("small_ball_bounds: x must be positive");
    }
    const double lower = std::sqrt(2.0 / std::numbers::pi) * x * std::exp(-0.5 * x * x);
    return {lower, normal_abs_within(x), x};
}

TailBounds linear_small_ball_bounds(double x)
{
    if (!(x > 0.0 && x <= 1.0)) {
        throw ArgumentError("linear_small_ball_bounds: requires 0 < x <= 1");
    }
    return {0.25 * x, normal_abs_within(x), x};
}

} // namespace pershlab::oracles
