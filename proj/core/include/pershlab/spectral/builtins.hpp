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

#include <string>
#include <string_view>
#include <vector>

#include "pershlab/spectral/measure.hpp"

namespace pershlab::spectral::builtins {

/// Density 1/(2 pi) on [-pi, pi]; r(t) = sinc(pi t). Sampled at integers it
/// is white noise.
SpectralMeasure sinc_box();

/// r(t) = J0(t).
SpectralMeasure bessel_j0();

/// Atom pair at +-lambda with total mass `mass`: r(t) = mass cos(lambda t).
SpectralMeasure cosine_pair(double lambda = 1.0, double mass = 1.0);

/// Atom of the given mass at the origin: r(t) = mass.
SpectralMeasure origin_atom(double mass = 1.0);

SpectralMeasure box(double height, double lo, double hi);
SpectralMeasure gap_box(double height, double gap, double cutoff);
SpectralMeasure counterexample(double a, double b, Oscillation mode);
SpectralMeasure nonconv_tail();
SpectralMeasure moving_average(std::vector<double> weights);
SpectralMeasure tabulated(std::vector<double> lambda, std::vector<double> value);

/// Names accepted by by_name: one default instance per family.
std::vector<std::string> names();

/// Default instance for a name from names(); throws ArgumentError otherwise.
SpectralMeasure by_name(std::string_view name);

} // namespace pershlab::spectral::builtins
