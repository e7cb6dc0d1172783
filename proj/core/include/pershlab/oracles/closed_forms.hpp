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

#include "pershlab/events.hpp"

namespace pershlab::oracles {

// The process z1 cos t + z2 sin t equals R cos(t - phi) with R Rayleigh and
// phi uniform. Both functions below are exact up to a 1-D quadrature.

/// P(inf over [0, horizon] of z1 cos t + z2 sin t > level).
///
/// Computed in the phase variable: after integrating by parts over the
/// radius, only smooth integrals of exp(-level^2 / (2 cos^2 a)) remain. For
/// level = 0 this is max(0, pi - horizon) / (2 pi).
double cosine_process_persistence(double level, double horizon);

/// P(sup over [0, horizon] of z1 cos t + z2 sin t < level), integrated over
/// the Rayleigh radius directly. By symmetry it equals
/// cosine_process_persistence(-level, horizon); the two routes share no code.
double cosine_process_stays_below(double level, double horizon);

/// Exact persistence or ball probability for n i.i.d. N(0, 1) values.
/// Throws ArgumentError for n == 0 or a ball event with level <= 0.
double iid_probability(double level, std::size_t n, EventKind kind);

} // namespace pershlab::oracles
