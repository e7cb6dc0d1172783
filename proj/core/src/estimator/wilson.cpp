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

#include "pershlab/estimator/wilson.hpp"

#include <algorithm>
#include <cmath>

#include "pershlab/error.hpp"

namespace pershlab::estimator {

Interval wilson_interval(std::size_t hits, std::size_t n, double z)
{
    if (n == 0 || hits > n) {
        throw ArgumentError("wilson_interval: need 0 <= hits <= n and n > 0");
    }
    if (!(z > 0.0)) {
        throw ArgumentError("wilson_interval: z must be positive");
    }
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(hits) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double centre = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    Interval ci{std::max(0.0, centre - half), std::min(1.0, centre + half)};
    if (hits == 0) {
        ci.lo = 0.0;
    }
    if (hits == n) {
        ci.hi = 1.0;
    }
    return ci;
}

} // namespace pershlab::estimator
