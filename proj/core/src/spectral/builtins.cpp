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

#include "pershlab/spectral/builtins.hpp"

#include "pershlab/error.hpp"

namespace pershlab::spectral::builtins {

SpectralMeasure sinc_box()
{
    return SpectralMeasure::from_piece(DensityPiece::sinc_box(), "sinc_box");
}

SpectralMeasure bessel_j0()
{
    return SpectralMeasure::from_piece(DensityPiece::bessel_j0(), "bessel_j0");
}

SpectralMeasure cosine_pair(double lambda, double mass)
{
    if (!(lambda > 0.0)) {
        throw ArgumentError("cosine_pair: lambda must be positive");
    }
    return SpectralMeasure::atom_pair(lambda, mass).named("cosine_pair");
}

SpectralMeasure origin_atom(double mass)
{
    return SpectralMeasure({}, {Atom{0.0, mass}}, 1.0, "origin_atom");
}

SpectralMeasure box(double height, double lo, double hi)
{
    return SpectralMeasure::from_piece(DensityPiece::box(height, lo, hi), "box");
}

SpectralMeasure gap_box(double height, double gap, double cutoff)
{
    return SpectralMeasure::from_piece(DensityPiece::gap_box(height, gap, cutoff), "gap_box");
}

SpectralMeasure counterexample(double a, double b, Oscillation mode)
{
    return SpectralMeasure::from_piece(
        DensityPiece::counterexample(a, b, mode),
        mode == Oscillation::reciprocal ? "counterexample_reciprocal" : "counterexample_log");
}

SpectralMeasure nonconv_tail()
{
    return SpectralMeasure::from_piece(DensityPiece::nonconv_tail(), "nonconv_tail");
}

SpectralMeasure moving_average(std::vector<double> weights)
{
    return SpectralMeasure::from_piece(DensityPiece::moving_average(std::move(weights)), "ma_density");
}

SpectralMeasure tabulated(std::vector<double> lambda, std::vector<double> value)
{
    return SpectralMeasure::from_piece(DensityPiece::tabulated(std::move(lambda), std::move(value)),
                                       "tabulated");
}

std::vector<std::string> names()
{
    return {"box",         "sinc_box",  "bessel_j0",  "counterexample_reciprocal",
            "counterexample_log", "gap_box", "nonconv_tail", "tabulated",
            "ma_density",  "cosine_pair"};
}

SpectralMeasure by_name(std::string_view name)
{
    if (name == "box") {
        return box(0.5, 0.5, 1.5);
    }
    if (name == "sinc_box") {
        return sinc_box();
    }
    if (name == "bessel_j0") {
        return bessel_j0();
    }
    if (name == "counterexample_reciprocal") {
        return counterexample(1.0, 3.0, Oscillation::reciprocal);
    }
    if (name == "counterexample_log") {
        return counterexample(1.0, 3.0, Oscillation::log_reciprocal);
    }
    if (name == "gap_box") {
        return gap_box(0.25, 1.0, 3.0);
    }
    if (name == "nonconv_tail") {
        return nonconv_tail();
    }
    if (name == "tabulated") {
        return tabulated({0.0, 0.5, 1.0, 1.5, 2.0}, {0.3, 0.25, 0.2, 0.1, 0.0});
    }
    if (name == "ma_density") {
        return moving_average({0.5, 0.5});
    }
    if (name == "cosine_pair") {
        return cosine_pair();
    }
    throw ArgumentError("unknown builtin measure '" + std::string(name) + "'");
}

} // namespace pershlab::spectral::builtins
