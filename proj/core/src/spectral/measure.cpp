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

#include "pershlab/spectral/measure.hpp"

#include <algorithm>
#include <cmath>

#include "pershlab/error.hpp"

namespace pershlab::spectral {

SpectralMeasure::SpectralMeasure(std::vector<DensityPiece> pieces, std::vector<Atom> atoms,
                                 double scale, std::string name)
    : atoms_(std::move(atoms)), scale_(scale), name_(std::move(name))
{
    if (!(scale >= 0.0) || !std::isfinite(scale)) {
        throw ArgumentError("spectral measure: scale must be finite and nonnegative");
    }
    for (const Atom& a : atoms_) {
        if (!(a.lambda >= 0.0) || !std::isfinite(a.lambda)) {
            throw ArgumentError("spectral measure: atom locations must be finite and >= 0");
        }
        if (!(a.mass >= 0.0) || !std::isfinite(a.mass)) {
            throw ArgumentError("spectral measure: atom masses must be finite and >= 0");
        }
    }
    std::erase_if(atoms_, [](const Atom& a) { return a.mass == 0.0; });
    for (auto& p : pieces) {
        if (!p.empty()) {
            pieces_.push_back(std::move(p));
        }
    }
    if (scale_ == 0.0) {
        pieces_.clear();
        atoms_.clear();
        scale_ = 1.0;
    }
}

SpectralMeasure SpectralMeasure::atom_pair(double lambda, double mass)
{
    return {{}, {Atom{lambda, mass}}, 1.0};
}

SpectralMeasure SpectralMeasure::from_piece(DensityPiece piece, std::string name)
{
    std::vector<DensityPiece> pieces;
    pieces.push_back(std::move(piece));
    return {std::move(pieces), {}, 1.0, std::move(name)};
}

SpectralMeasure SpectralMeasure::named(std::string name) const
{
    SpectralMeasure m = *this;
    m.name_ = std::move(name);
    return m;
}

bool SpectralMeasure::is_zero() const
{
    return pieces_.empty() && atoms_.empty();
}

double SpectralMeasure::total_mass() const
{
    double m = 0.0;
    for (const auto& p : pieces_) {
        m += p.mass();
    }
    for (const auto& a : atoms_) {
        m += a.mass;
    }
    return scale_ * m;
}

double SpectralMeasure::positive_mass(double a, double b) const
{
    if (!(a >= 0.0) || !(b >= a)) {
        throw ArgumentError("positive_mass: need 0 <= a <= b");
    }
    double m = 0.0;
    for (const auto& p : pieces_) {
        m += p.positive_mass(a, b);
    }
    for (const auto& at : atoms_) {
        if (at.lambda >= a && at.lambda <= b) {
            m += at.lambda == 0.0 ? at.mass : 0.5 * at.mass;
        }
    }
    return scale_ * m;
}

double SpectralMeasure::symmetric_mass(double x) const
{
    if (!(x > 0.0)) {
        throw ArgumentError("symmetric_mass: x must be positive");
    }
    double m = 0.0;
    for (const auto& p : pieces_) {
        m += 2.0 * p.positive_mass(0.0, x);
    }
    for (const auto& at : atoms_) {
        if (at.lambda < x) {
            m += at.mass;
        }
    }
    return scale_ * m;
}

double SpectralMeasure::density(double lambda) const
{
    double d = 0.0;
    for (const auto& p : pieces_) {
        d += p.density(lambda);
    }
    return scale_ * d;
}

double SpectralMeasure::covariance(double t) const
{
    if (!std::isfinite(t)) {
        throw ArgumentError("covariance: t must be finite");
    }
    double r = 0.0;
    for (const auto& p : pieces_) {
        r += p.covariance(t);
    }
    for (const auto& a : atoms_) {
        r += a.mass * std::cos(a.lambda * t);
    }
    return scale_ * r;
}

double SpectralMeasure::support_radius() const
{
    double d = 0.0;
    for (const auto& p : pieces_) {
        d = std::max(d, p.hi());
    }
    for (const auto& a : atoms_) {
        d = std::max(d, a.lambda);
    }
    return d;
}

} // namespace pershlab::spectral
