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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pershlab/oracles/quadrature.hpp"
#include "pershlab/spectral/multiplier.hpp"

namespace pershlab::spectral {

class DensityPiece;

enum class Oscillation { reciprocal, log_reciprocal };

namespace family {

/// Constant height on the piece support. `gap` only changes the reported tag.
struct Box {
    double height;
    bool gap = false;
};

/// Height 1/(2 pi) on [0, pi]: r(t) = sin(pi t) / (pi t), r(0) = 1.
struct SincBox {};

/// (1/pi) (1 - l^2)^(-1/2) on [0, 1): r(t) = J0(t), r(0) = 1.
struct BesselJ0 {};

/// (b + a)/2 + (b - a)/2 osc(l) on [0, 1], osc = cos(1/l) or cos(log(1/l)).
struct Counterexample {
    double a;
    double b;
    Oscillation mode;
};

/// 1 on [0, pi) plus narrow peaks (1 - e^l dist(l, 2 pi Z))_+ / l centred
/// at 2 pi n, n = 1..peaks. Truncated after `peaks` peaks.
struct NonconvTail {
    int peaks;
};

/// Linear interpolation between (lambda_i, value_i).
struct Tabulated {
    std::vector<double> lambda;
    std::vector<double> value;
};

/// |sum_k U_k e^{i k l}|^2 / (2 pi) on [0, pi]; r(j) = sum_k U_k U_{k+j}.
struct MovingAverage {
    std::vector<double> weights;
    std::vector<double> autocorrelation; // c_m = sum_k U_k U_{k+m}, m >= 0
};

/// One translate of a base piece wrapped into [0, half_period]:
/// g(l) = w(shift + l) + w(shift - l), where w is the symmetric base density.
struct Folded {
    std::shared_ptr<const DensityPiece> base;
    double shift;
};

} // namespace family

using Family = std::variant<family::Box, family::SincBox, family::BesselJ0,
                            family::Counterexample, family::NonconvTail, family::Tabulated,
                            family::MovingAverage, family::Folded>;

/// A factor k(lambda) integrated against a density, with an angular
/// frequency hint used to size the initial quadrature panels. `options`
/// replaces the default tolerances for every quadrature the integral uses.
struct Kernel {
    std::function<double(double)> f;
    double omega = 0.0;
    std::optional<oracles::QuadratureOptions> options{};

    static Kernel one();
    static Kernel cosine(double t);
    static Kernel sine(double t);
};

/// Quadrature settings shared by every spectral integral.
const oracles::QuadratureOptions& spectral_quadrature();

/// Absolutely continuous component of a symmetric spectral measure, stored
/// by its restriction to lambda >= 0; the mirror image on lambda < 0 is
/// implied. Immutable value type.
class DensityPiece {
public:
    static DensityPiece box(double height, double lo, double hi);
    static DensityPiece gap_box(double height, double gap, double cutoff);
    static DensityPiece sinc_box();
    static DensityPiece bessel_j0();
    static DensityPiece counterexample(double a, double b, Oscillation mode);
    /// Without an explicit count, keeps peaks until the dropped tail mass is
    /// below 1e-12 of the total.
    static DensityPiece nonconv_tail(std::optional<int> peaks = std::nullopt);
    static DensityPiece tabulated(std::vector<double> lambda, std::vector<double> value);
    static DensityPiece moving_average(std::vector<double> weights);
    static DensityPiece folded(std::shared_ptr<const DensityPiece> base, double shift,
                               double half_period);

    const Family& family() const { return family_; }
    std::string family_name() const;

    /// Support on lambda >= 0 after any restriction.
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool empty() const { return !(hi_ > lo_) || weight_ == 0.0; }
    double weight() const { return weight_; }
    const std::vector<Multiplier>& multipliers() const { return multipliers_; }

    /// Density at any real lambda (even in lambda).
    double density(double lambda) const;

    /// Total mass over the whole line (both halves).
    double mass() const;

    /// Mass of the lambda >= 0 half restricted to [a, b], 0 <= a <= b.
    double positive_mass(double a, double b) const;

    /// Integral of density * k over [a, b] with 0 <= a <= b.
    double integrate(double a, double b, const Kernel& k) const;

    /// Integral of density * k over any real [a, b] (uses the mirror image).
    double integrate_line(double a, double b, const Kernel& k) const;

    /// Integrals of density * (cos(l t), sin(l t)) over [a, b], 0 <= a <= b.
    std::pair<double, double> trig_moments(double a, double b, double t) const;

    /// 2 * integral_0^inf cos(l t) w(l) dl.
    double covariance(double t) const;

    /// Points in [lo, hi] where the density has jumps, kinks or peaks.
    std::vector<double> breakpoints() const;

    /// Points where the density has an inverse square-root singularity.
    std::vector<double> singular_points() const;

    DensityPiece restricted(double lo, double hi) const;
    DensityPiece with_multiplier(const Multiplier& m) const;
    DensityPiece scaled(double c) const;

    /// Numeric family parameters in a fixed order (used for comparison and
    /// serialization).
    std::vector<double> parameters() const;

    /// Structural equality: family, parameters, support, weight, multipliers.
    bool same_as(const DensityPiece& other) const;

    /// True when the family, support and multipliers admit closed-form
    /// covariance evaluation.
    bool closed_form_covariance() const;

private:
    DensityPiece(Family family, double lo, double hi);

    double raw_density(double lambda) const;
    double multiplier_factor(double lambda) const;
    double integrate_family(double a, double b, const std::function<double(double)>& g,
                            double omega) const;
    std::vector<double> family_breakpoints() const;

    Family family_;
    double lo_;
    double hi_;
    double weight_ = 1.0;
    std::vector<Multiplier> multipliers_;
};

/// Total mass of the peak of the nonconv_tail density centred at 2 pi n
/// (lambda >= 0 half only). Exposed for tests and the fold report.
double nonconv_peak_mass(int n);

/// Peak edges (left, right) of the nonconv_tail peak centred at 2 pi n.
std::pair<double, double> nonconv_peak_edges(int n);

} // namespace pershlab::spectral
