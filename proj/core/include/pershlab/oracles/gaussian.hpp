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

namespace pershlab::oracles {

/// Standard normal CDF.
double normal_cdf(double x);

/// Upper tail P(Z > x), evaluated through erfc so it stays accurate for large x.
double normal_tail(double x);

/// P(|Z| <= x); zero for x <= 0.
double normal_abs_within(double x);

double normal_pdf(double x);

/// Two-sided bounds on a Gaussian probability at a point x.
struct TailBounds {
    double lower;
    double value;
    double upper;

    bool holds() const { return lower <= value && value <= upper; }
};

/// Mills-ratio sandwich (1/x - 1/x^3) phi(x) <= P(Z > x) <= phi(x)/x, x > 0.
TailBounds mills_tail_bounds(double x);

/// exp(-x^2) <= P(Z > x) <= exp(-x^2/2), valid for x >= 2.
TailBounds exponential_tail_bounds(double x);

/// sqrt(2/pi) x exp(-x^2/2) <= P(|Z| <= x) <= x, x > 0.
TailBounds small_ball_bounds(double x);

/// x/4 <= P(|Z| <= x) <= x, valid for 0 < x <= 1.
TailBounds linear_small_ball_bounds(double x);

} // namespace pershlab::oracles
