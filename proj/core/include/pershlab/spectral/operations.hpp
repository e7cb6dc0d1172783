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

#include <string_view>

#include "pershlab/spectral/measure.hpp"
#include "pershlab/spectral/multiplier.hpp"

namespace pershlab::spectral {

/// r(t) = atom_0 + sum_{l > 0 atoms} m cos(l t) + 2 integral_0^inf cos(l t) w(l) dl.
/// Throws ArgumentError for non-finite t and AccuracyError if quadrature
/// misses its tolerance.
double covariance(const SpectralMeasure& measure, double t);

/// Spectral measure of the sequence f(k delta): rho wrapped modulo
/// 2 pi / delta onto [-pi / delta, pi / delta].
///
/// Boxes fold in closed form; other pieces become folded translates that
/// integrate against the original piece. Atoms move to |remainder(l, 2 pi / delta)|.
/// Throws UnsupportedError for a piece without bounded support.
SpectralMeasure fold(const SpectralMeasure& measure, double delta);

/// rho restricted to [-cutoff, cutoff].
SpectralMeasure restrict(const SpectralMeasure& measure, double cutoff);

/// h(l)^2 d rho(l).
SpectralMeasure apply_multiplier(const SpectralMeasure& measure, const Multiplier& h);
SpectralMeasure apply_multiplier(const SpectralMeasure& measure, std::string_view tag,
                                 double parameter);

SpectralMeasure add(const SpectralMeasure& a, const SpectralMeasure& b);

/// c * rho. Throws ArgumentError for c < 0.
SpectralMeasure scale(const SpectralMeasure& measure, double c);

/// sup_E |rho_1(E) - rho_2(E)|, the larger of the positive and negative
/// variations of rho_1 - rho_2. Pieces that agree structurally cancel before
/// any quadrature.
double tv_distance(const SpectralMeasure& a, const SpectralMeasure& b);

/// tv_distance plus |rho_1'(0) - rho_2'(0)|. Throws PreconditionError unless
/// both origin densities are classified finite.
double tv0_distance(const SpectralMeasure& a, const SpectralMeasure& b);

} // namespace pershlab::spectral
