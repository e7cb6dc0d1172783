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
#include <vector>

#include "pershlab/spectral/density.hpp"

namespace pershlab::spectral {

/// Point mass. At lambda = 0 it is a single atom; at lambda > 0 it stands
/// for the pair {-lambda, lambda}, each carrying mass / 2.
struct Atom {
    double lambda;
    double mass;

    bool operator==(const Atom&) const = default;
};

/// Finite, nonnegative, symmetric measure on the real line:
/// scale * (sum of density pieces + sum of atoms).
class SpectralMeasure {
public:
    SpectralMeasure() = default;
    SpectralMeasure(std::vector<DensityPiece> pieces, std::vector<Atom> atoms, double scale = 1.0,
                    std::string name = {});

    static SpectralMeasure zero() { return {}; }
    static SpectralMeasure atom_pair(double lambda, double mass);
    static SpectralMeasure from_piece(DensityPiece piece, std::string name = {});

    const std::vector<DensityPiece>& pieces() const { return pieces_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    double scale() const { return scale_; }
    const std::string& name() const { return name_; }
    SpectralMeasure named(std::string name) const;

    bool is_zero() const;
    bool has_density() const { return !pieces_.empty(); }

    double total_mass() const;

    /// rho([a, b]) for 0 <= a <= b, counting only the lambda >= 0 half
    /// (an atom pair at lambda > 0 contributes mass / 2).
    double positive_mass(double a, double b) const;

    /// rho((-x, x)) for x > 0.
    double symmetric_mass(double x) const;

    /// Density of the absolutely continuous part at any real lambda.
    double density(double lambda) const;

    /// r(t) = integral e^{-i t l} d rho(l).
    double covariance(double t) const;

    /// Smallest D with rho supported in [-D, D].
    double support_radius() const;

private:
    std::vector<DensityPiece> pieces_;
    std::vector<Atom> atoms_;
    double scale_ = 1.0;
    std::string name_;
};

} // namespace pershlab::spectral
