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

#include <optional>
#include <string>
#include <string_view>

namespace pershlab::spectral {

/// An even, nonnegative frequency multiplier h. Applying it to a measure
/// produces h(lambda)^2 d rho(lambda).
class Multiplier {
public:
    enum class Kind { fejer, triangle, constant };

    /// h(l) = (sin(a l / 4) / (a l / 4))^2, the transform of the unit-mass
    /// triangle on [-a/2, a/2]. Requires a > 0.
    static Multiplier fejer(double a);

    /// h(l) = max(0, 1 - |l| / width). Requires width > 0.
    static Multiplier triangle(double width);

    /// h(l) = c. Requires c >= 0.
    static Multiplier constant(double c);

    /// Parses a tag ("fejer", "triangle", "constant"); throws ArgumentError
    /// for anything else.
    static Multiplier from_tag(std::string_view tag, double parameter);

    Kind kind() const { return kind_; }
    double parameter() const { return parameter_; }
    std::string tag() const;

    double value(double lambda) const;
    double squared(double lambda) const
    {
        const double h = value(lambda);
        return h * h;
    }

    /// Frequency beyond which h vanishes, if any.
    std::optional<double> cutoff() const;

    bool operator==(const Multiplier&) const = default;

private:
    Multiplier(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

    Kind kind_;
    double parameter_;
};

} // namespace pershlab::spectral
