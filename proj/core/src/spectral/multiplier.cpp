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

#include "pershlab/spectral/multiplier.hpp"

#include <cmath>

#include "pershlab/error.hpp"

namespace pershlab::spectral {

Multiplier Multiplier::fejer(double a)
{
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw ArgumentError("fejer multiplier: width a must be positive");
    }
    return {Kind::fejer, a};
}

Multiplier Multiplier::triangle(double width)
{
    if (!(width > 0.0) || !std::isfinite(width)) {
        throw ArgumentError("triangle multiplier: width must be positive");
    }
    return {Kind::triangle, width};
}

Multiplier Multiplier::constant(double c)
{
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw ArgumentError("constant multiplier: value must be nonnegative");
    }
    return {Kind::constant, c};
}

Multiplier Multiplier::from_tag(std::string_view tag, double parameter)
{
    if (tag == "fejer") {
        return fejer(parameter);
    }
    if (tag == "triangle") {
        return triangle(parameter);
    }
    if (tag == "constant") {
        return constant(parameter);
    }
    throw ArgumentError("unknown multiplier tag '" + std::string(tag) + "'");
}

std::string Multiplier::tag() const
{
    switch (kind_) {
    case Kind::fejer:
        return "fejer";
    case Kind::triangle:
        return "triangle";
    case Kind::constant:
        return "constant";
    }
    return {};
}

double Multiplier::value(double lambda) const
{
    switch (kind_) {
    case Kind::fejer: {
        const double x = 0.25 * parameter_ * lambda;
        if (std::abs(x) < 1e-8) {
            return 1.0 - x * x / 3.0;
        }
        const double s = std::sin(x) / x;
        return s * s;
    }
    case Kind::triangle:
        return std::max(0.0, 1.0 - std::abs(lambda) / parameter_);
    case Kind::constant:
        return parameter_;
    }
    return 0.0;
}

std::optional<double> Multiplier::cutoff() const
{
    if (kind_ == Kind::triangle) {
        return parameter_;
    }
    return std::nullopt;
}

} // namespace pershlab::spectral
