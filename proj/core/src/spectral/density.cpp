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

#include "pershlab/spectral/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pershlab/error.hpp"

namespace pershlab::spectral {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

thread_local const oracles::QuadratureOptions* tolerance_override = nullptr;

class ToleranceScope {
public:
    explicit ToleranceScope(const std::optional<oracles::QuadratureOptions>& o)
        : previous_(tolerance_override)
    {
        if (o) {
            tolerance_override = &*o;
        }
    }
    ~ToleranceScope() { tolerance_override = previous_; }
    ToleranceScope(const ToleranceScope&) = delete;
    ToleranceScope& operator=(const ToleranceScope&) = delete;

private:
    const oracles::QuadratureOptions* previous_;
};

oracles::QuadratureOptions with_oscillation(double omega)
{
    oracles::QuadratureOptions o = tolerance_override ? *tolerance_override : spectral_quadrature();
    o.oscillation = std::abs(omega);
    return o;
}

double quad(const std::function<double(double)>& f, double a, double b, double omega,
            std::vector<double> breakpoints = {})
{
    if (!(b > a)) {
        return 0.0;
    }
    std::erase_if(breakpoints, [a, b](double x) { return !(x > a && x < b); });
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
    return oracles::integrate(f, a, b, with_oscillation(omega), breakpoints).value;
}

// integral_0^pi cos(alpha l) dl, exact at integers.
double cosine_integral_pi(double alpha)
{
    if (alpha == 0.0) {
        return kPi;
    }
    if (alpha == std::round(alpha)) {
        return 0.0;
    }
    return std::sin(alpha * kPi) / alpha;
}

// Antiderivative of cos(log(1/x)) vanishing at 0.
double log_cos_antiderivative(double x)
{
    if (x <= 0.0) {
        return 0.0;
    }
    return x / std::numbers::sqrt2 * std::cos(std::log(1.0 / x) + 0.25 * kPi);
}

// Right/left edge of the nonconv peak at c: solve e^{c+d} |d| = 1.
double peak_half_width(double c, bool right)
{
    double e = std::exp(-c);
    for (int i = 0; i < 100; ++i) {
        const double s = right ? e : -e;
        const double g = e * std::exp(c + s) - 1.0;
        const double dg = std::exp(c + s) * (right ? 1.0 + e : 1.0 - e);
        const double next = e - g / dg;
        if (std::abs(next - e) <= 1e-17 * e) {
            return next;
        }
        e = next;
    }
    return e;
}

int default_nonconv_peaks()
{
    // Peak n carries mass about e^{-2 pi n} / (pi n) on lambda >= 0; the
    // total on lambda >= 0 is about pi.
    for (int n = 1;; ++n) {
        double tail = 0.0;
        for (int m = n + 1; m < n + 40; ++m) {
            tail += std::exp(-kTwoPi * m) / (kPi * m);
        }
        if (tail < 1e-12 * kPi) {
            return n;
        }
    }
}

// Tail of integral_X^inf cos(u) phi(u) du by two integrations by parts.
double oscillatory_tail(const std::function<double(double)>& phi, double x)
{
    const double h = std::max(1e-3 * x, 1e-3);
    const double fm = phi(x - h);
    const double f0 = phi(x);
    const double fp = phi(x + h);
    const double d1 = (fp - fm) / (2.0 * h);
    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    return -std::sin(x) * (f0 - d2) - std::cos(x) * d1;
}

std::vector<double> half_pi_grid(double a, double b)
{
    std::vector<double> pts;
    const double first = std::ceil(a / kPi - 0.5);
    for (double k = first;; k += 1.0) {
        const double x = (k + 0.5) * kPi;
        if (x >= b) {
            break;
        }
        if (x > a) {
            pts.push_back(x);
        }
    }
    return pts;
}

// integral_a^b cos(1/l) g(l) dl, 0 <= a < b.
double reciprocal_oscillation(double a, double b, const std::function<double(double)>& g,
                              double omega)
{
    double total = 0.0;
    const double split = omega > 1.0 ? std::clamp(1.0 / std::sqrt(omega), a, b) : b;
    if (split < b) {
        const auto f = [&g](double l) { return std::cos(1.0 / l) * g(l); };
        total += quad(f, split, b, omega + 1.0 / (split * split));
    }
    if (!(split > a)) {
        return total;
    }
    const double u0 = 1.0 / split;
    const double u_end = a > 0.0 ? 1.0 / a : std::numeric_limits<double>::infinity();
    const auto phi = [&g](double u) { return g(1.0 / u) / (u * u); };
    const auto f = [&phi](double u) { return std::cos(u) * phi(u); };
    double cap = std::max({2000.0, 100.0 * omega, u0 + 20.0});
    cap = (std::ceil(cap / kPi - 0.5) + 0.5) * kPi;
    if (u_end <= cap) {
        total += quad(f, u0, u_end, 1.0, half_pi_grid(u0, u_end));
        return total;
    }
    total += quad(f, u0, cap, 1.0, half_pi_grid(u0, cap));
    total += oscillatory_tail(phi, cap);
    if (std::isfinite(u_end)) {
        total -= oscillatory_tail(phi, u_end);
    }
    return total;
}

// integral_a^b cos(log(1/l)) g(l) dl, 0 <= a < b.
double log_reciprocal_oscillation(double a, double b, const std::function<double(double)>& g,
                                  double omega)
{
    const double u0 = std::log(1.0 / b);
    double u1 = u0 + 40.0;
    if (a > 0.0) {
        u1 = std::min(u1, std::log(1.0 / a));
    }
    const auto f = [&g](double u) {
        const double l = std::exp(-u);
        return std::cos(u) * g(l) * l;
    };
    return quad(f, u0, u1, std::max(1.0, omega * b), half_pi_grid(u0, u1));
}

double tabulated_value(const family::Tabulated& tab, double lambda)
{
    const auto& x = tab.lambda;
    if (lambda < x.front() || lambda > x.back()) {
        return 0.0;
    }
    auto it = std::upper_bound(x.begin(), x.end(), lambda);
    if (it == x.end()) {
        return tab.value.back();
    }
    const auto i = static_cast<std::size_t>(it - x.begin());
    const double w = (lambda - x[i - 1]) / (x[i] - x[i - 1]);
    return tab.value[i - 1] + w * (tab.value[i] - tab.value[i - 1]);
}

double tabulated_mass(const family::Tabulated& tab, double a, double b)
{
    double total = 0.0;
    const auto& x = tab.lambda;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double l = std::max(a, x[i - 1]);
        const double r = std::min(b, x[i]);
        if (r > l) {
            total += 0.5 * (r - l) * (tabulated_value(tab, l) + tabulated_value(tab, r));
        }
    }
    return total;
}

} // namespace

Kernel Kernel::one()
{
    return {[](double) { return 1.0; }, 0.0};
}

Kernel Kernel::cosine(double t)
{
    return {[t](double l) { return std::cos(l * t); }, t};
}

Kernel Kernel::sine(double t)
{
    return {[t](double l) { return std::sin(l * t); }, t};
}

const oracles::QuadratureOptions& spectral_quadrature()
{
    static const oracles::QuadratureOptions options = [] {
        oracles::QuadratureOptions o;
        o.abs_tol = 1e-13;
        o.rel_tol = 1e-12;
        return o;
    }();
    return options;
}

std::pair<double, double> nonconv_peak_edges(int n)
{
    const double c = kTwoPi * n;
    return {c - peak_half_width(c, false), c + peak_half_width(c, true)};
}

double nonconv_peak_mass(int n)
{
    const double c = kTwoPi * n;
    const auto [l, r] = nonconv_peak_edges(n);
    const auto f = [c](double x) { return std::max(0.0, 1.0 - std::exp(x) * std::abs(x - c)) / x; };
    return quad(f, l, c, 0.0) + quad(f, c, r, 0.0);
}

DensityPiece::DensityPiece(Family family, double lo, double hi)
    : family_(std::move(family)), lo_(lo), hi_(hi)
{
}

DensityPiece DensityPiece::box(double height, double lo, double hi)
{
    if (!(height >= 0.0) || !std::isfinite(height)) {
        throw ArgumentError("box: height must be finite and nonnegative");
    }
    if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi)) {
        throw ArgumentError("box: support must satisfy 0 <= lo < hi < inf");
    }
    return {family::Box{height, false}, lo, hi};
}

DensityPiece DensityPiece::gap_box(double height, double gap, double cutoff)
{
    DensityPiece p = box(height, gap, cutoff);
    std::get<family::Box>(p.family_).gap = true;
    return p;
}

DensityPiece DensityPiece::sinc_box()
{
    return {family::SincBox{}, 0.0, kPi};
}

DensityPiece DensityPiece::bessel_j0()
{
    return {family::BesselJ0{}, 0.0, 1.0};
}

DensityPiece DensityPiece::counterexample(double a, double b, Oscillation mode)
{
    if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) {
        throw ArgumentError("counterexample: need 0 < a < b");
    }
    return {family::Counterexample{a, b, mode}, 0.0, 1.0};
}

DensityPiece DensityPiece::nonconv_tail(std::optional<int> peaks)
{
    const int n = peaks.value_or(default_nonconv_peaks());
    if (n < 0) {
        throw ArgumentError("nonconv_tail: peak count must be nonnegative");
    }
    const double hi = n == 0 ? kPi : nonconv_peak_edges(n).second;
    return {family::NonconvTail{n}, 0.0, hi};
}

DensityPiece DensityPiece::tabulated(std::vector<double> lambda, std::vector<double> value)
{
    if (lambda.size() < 2 || lambda.size() != value.size()) {
        throw ArgumentError("tabulated: need at least two (lambda, value) pairs of equal length");
    }
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (!std::isfinite(lambda[i]) || !std::isfinite(value[i]) || value[i] < 0.0) {
            throw ArgumentError("tabulated: values must be finite and nonnegative");
        }
        if (i == 0 ? lambda[0] < 0.0 : !(lambda[i] > lambda[i - 1])) {
            throw ArgumentError("tabulated: lambda grid must be nonnegative and strictly increasing");
        }
    }
    const double lo = lambda.front();
    const double hi = lambda.back();
    return {family::Tabulated{std::move(lambda), std::move(value)}, lo, hi};
}

DensityPiece DensityPiece::moving_average(std::vector<double> weights)
{
    if (weights.empty()) {
        throw ArgumentError("ma_density: weights must not be empty");
    }
    for (double w : weights) {
        if (!std::isfinite(w)) {
            throw ArgumentError("ma_density: weights must be finite");
        }
    }
    std::vector<double> c(weights.size(), 0.0);
    for (std::size_t m = 0; m < weights.size(); ++m) {
        for (std::size_t k = 0; k + m < weights.size(); ++k) {
            c[m] += weights[k] * weights[k + m];
        }
    }
    return {family::MovingAverage{std::move(weights), std::move(c)}, 0.0, kPi};
}

DensityPiece DensityPiece::folded(std::shared_ptr<const DensityPiece> base, double shift,
                                  double half_period)
{
    if (!base) {
        throw ArgumentError("folded: missing base piece");
    }
    if (!(half_period > 0.0) || !std::isfinite(shift)) {
        throw ArgumentError("folded: need a finite shift and a positive half period");
    }
    return {family::Folded{std::move(base), shift}, 0.0, half_period};
}

std::string DensityPiece::family_name() const
{
    return std::visit(Overloaded{
                          [](const family::Box& b) -> std::string { return b.gap ? "gap_box" : "box"; },
                          [](const family::SincBox&) -> std::string { return "sinc_box"; },
                          [](const family::BesselJ0&) -> std::string { return "bessel_j0"; },
                          [](const family::Counterexample&) -> std::string { return "counterexample"; },
                          [](const family::NonconvTail&) -> std::string { return "nonconv_tail"; },
                          [](const family::Tabulated&) -> std::string { return "tabulated"; },
                          [](const family::MovingAverage&) -> std::string { return "ma_density"; },
                          [](const family::Folded&) -> std::string { return "folded"; },
                      },
                      family_);
}

double DensityPiece::raw_density(double lambda) const
{
    return std::visit(
        Overloaded{
            [](const family::Box& b) { return b.height; },
            [](const family::SincBox&) { return 1.0 / kTwoPi; },
            [lambda](const family::BesselJ0&) {
                return lambda >= 1.0 ? 0.0 : 1.0 / (kPi * std::sqrt((1.0 - lambda) * (1.0 + lambda)));
            },
            [lambda](const family::Counterexample& c) {
                if (lambda == 0.0) {
                    return 0.5 * (c.a + c.b);
                }
                const double osc = c.mode == Oscillation::reciprocal ? std::cos(1.0 / lambda)
                                                                     : std::cos(std::log(1.0 / lambda));
                return 0.5 * (c.b + c.a) + 0.5 * (c.b - c.a) * osc;
            },
            [lambda](const family::NonconvTail& t) {
                if (lambda < kPi) {
                    return 1.0;
                }
                const double n = std::round(lambda / kTwoPi);
                if (n < 1.0 || n > t.peaks) {
                    return 0.0;
                }
                return std::max(0.0, 1.0 - std::exp(lambda) * std::abs(lambda - kTwoPi * n)) / lambda;
            },
            [lambda](const family::Tabulated& t) { return tabulated_value(t, lambda); },
            [lambda](const family::MovingAverage& m) {
                double s = m.autocorrelation[0];
                for (std::size_t k = 1; k < m.autocorrelation.size(); ++k) {
                    s += 2.0 * m.autocorrelation[k] * std::cos(static_cast<double>(k) * lambda);
                }
                return std::max(0.0, s / kTwoPi);
            },
            [lambda](const family::Folded& f) {
                return f.base->density(f.shift + lambda) + f.base->density(f.shift - lambda);
            },
        },
        family_);
}

double DensityPiece::multiplier_factor(double lambda) const
{
    double h = weight_;
    for (const auto& m : multipliers_) {
        h *= m.squared(lambda);
    }
    return h;
}

double DensityPiece::density(double lambda) const
{
    const double x = std::abs(lambda);
    if (x < lo_ || x > hi_ || empty()) {
        return 0.0;
    }
    return raw_density(x) * multiplier_factor(x);
}

std::vector<double> DensityPiece::family_breakpoints() const
{
    return std::visit(
        Overloaded{
            [](const family::NonconvTail& t) {
                std::vector<double> pts{kPi};
                for (int n = 1; n <= t.peaks; ++n) {
                    const auto [l, r] = nonconv_peak_edges(n);
                    pts.insert(pts.end(), {l, kTwoPi * n, r});
                }
                return pts;
            },
            [](const family::Tabulated& t) { return t.lambda; },
            [this](const family::Folded& f) {
                std::vector<double> pts;
                for (double b : f.base->breakpoints()) {
                    for (double x : {b - f.shift, -b - f.shift, f.shift - b, f.shift + b}) {
                        if (x > lo_ && x < hi_) {
                            pts.push_back(x);
                        }
                    }
                }
                return pts;
            },
            [](const auto&) { return std::vector<double>{}; },
        },
        family_);
}

std::vector<double> DensityPiece::breakpoints() const
{
    std::vector<double> pts{lo_, hi_};
    for (double x : family_breakpoints()) {
        if (x > lo_ && x < hi_) {
            pts.push_back(x);
        }
    }
    for (const auto& m : multipliers_) {
        if (auto c = m.cutoff(); c && *c > lo_ && *c < hi_) {
            pts.push_back(*c);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<double> DensityPiece::singular_points() const
{
    std::vector<double> pts;
    if (std::holds_alternative<family::BesselJ0>(family_)) {
        if (hi_ >= 1.0) {
            pts.push_back(1.0);
        }
    } else if (const auto* f = std::get_if<family::Folded>(&family_)) {
        for (double b : f->base->singular_points()) {
            for (double x : {b - f->shift, -b - f->shift, f->shift - b, f->shift + b}) {
                if (x >= lo_ && x <= hi_) {
                    pts.push_back(x);
                }
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double DensityPiece::integrate_family(double a, double b, const std::function<double(double)>& g,
                                      double omega) const
{
    const auto plain = [&](double density_value) {
        return density_value * quad(g, a, b, omega, breakpoints());
    };
    return std::visit(
        Overloaded{
            [&](const family::Box& box) { return plain(box.height); },
            [&](const family::SincBox&) { return plain(1.0 / kTwoPi); },
            [&](const family::BesselJ0&) {
                const auto f = [&g](double theta) { return g(std::sin(theta)); };
                const double t0 = std::asin(a);
                const double t1 = std::asin(std::min(b, 1.0));
                std::vector<double> bps;
                for (double x : breakpoints()) {
                    if (x < 1.0) {
                        bps.push_back(std::asin(x));
                    }
                }
                return quad(f, t0, t1, omega, bps) / kPi;
            },
            [&](const family::Counterexample& c) {
                const double constant = 0.5 * (c.a + c.b) * quad(g, a, b, omega, breakpoints());
                const double osc = c.mode == Oscillation::reciprocal
                                       ? reciprocal_oscillation(a, b, g, omega)
                                       : log_reciprocal_oscillation(a, b, g, omega);
                return constant + 0.5 * (c.b - c.a) * osc;
            },
            [&](const family::NonconvTail& t) {
                double total = 0.0;
                total += quad(g, a, std::min(b, kPi), omega, breakpoints());
                for (int n = 1; n <= t.peaks; ++n) {
                    const double c = kTwoPi * n;
                    const auto [l, r] = nonconv_peak_edges(n);
                    const auto f = [&g, c](double x) {
                        return std::max(0.0, 1.0 - std::exp(x) * std::abs(x - c)) / x * g(x);
                    };
                    total += quad(f, std::max(a, l), std::min(b, c), omega);
                    total += quad(f, std::max(a, c), std::min(b, r), omega);
                }
                return total;
            },
            [&](const family::Tabulated& t) {
                const auto f = [&g, &t](double x) { return tabulated_value(t, x) * g(x); };
                return quad(f, a, b, omega, breakpoints());
            },
            [&](const family::MovingAverage&) {
                const auto f = [&g, this](double x) { return raw_density(x) * g(x); };
                return quad(f, a, b, omega, breakpoints());
            },
            [&](const family::Folded& f) {
                const double s = f.shift;
                const Kernel up{[&g, s](double mu) { return g(mu - s); }, omega};
                const Kernel down{[&g, s](double mu) { return g(s - mu); }, omega};
                return f.base->integrate_line(s + a, s + b, up) +
                       f.base->integrate_line(s - b, s - a, down);
            },
        },
        family_);
}

double DensityPiece::integrate(double a, double b, const Kernel& k) const
{
    if (!(a >= 0.0) || !(b >= a)) {
        throw ArgumentError("integrate: need 0 <= a <= b");
    }
    const double l = std::max(a, lo_);
    const double r = std::min(b, hi_);
    if (!(r > l) || empty()) {
        return 0.0;
    }
    const ToleranceScope scope(k.options);
    const auto g = [this, &k](double x) { return multiplier_factor(x) * k.f(x); };
    return integrate_family(l, r, g, k.omega);
}

double DensityPiece::integrate_line(double a, double b, const Kernel& k) const
{
    if (!(b >= a)) {
        throw ArgumentError("integrate_line: need a <= b");
    }
    const Kernel mirrored{[&k](double x) { return k.f(-x); }, k.omega, k.options};
    if (a >= 0.0) {
        return integrate(a, b, k);
    }
    if (b <= 0.0) {
        return integrate(-b, -a, mirrored);
    }
    return integrate(0.0, -a, mirrored) + integrate(0.0, b, k);
}

double DensityPiece::positive_mass(double a, double b) const
{
    if (!(a >= 0.0) || !(b >= a)) {
        throw ArgumentError("positive_mass: need 0 <= a <= b");
    }
    const double l = std::max(a, lo_);
    const double r = std::min(b, hi_);
    if (!(r > l) || empty()) {
        return 0.0;
    }
    if (multipliers_.empty()) {
        const double w = weight_;
        if (const auto* box = std::get_if<family::Box>(&family_)) {
            return w * box->height * (r - l);
        }
        if (std::holds_alternative<family::SincBox>(family_)) {
            return w * (r - l) / kTwoPi;
        }
        if (std::holds_alternative<family::BesselJ0>(family_)) {
            return w * (std::asin(std::min(r, 1.0)) - std::asin(l)) / kPi;
        }
        if (const auto* c = std::get_if<family::Counterexample>(&family_);
            c && c->mode == Oscillation::log_reciprocal) {
            return w * (0.5 * (c->a + c->b) * (r - l) +
                        0.5 * (c->b - c->a) * (log_cos_antiderivative(r) - log_cos_antiderivative(l)));
        }
        if (const auto* t = std::get_if<family::Tabulated>(&family_)) {
            return w * tabulated_mass(*t, l, r);
        }
    }
    return integrate(l, r, Kernel::one());
}

double DensityPiece::mass() const
{
    return 2.0 * positive_mass(lo_, hi_);
}

bool DensityPiece::closed_form_covariance() const
{
    if (!multipliers_.empty()) {
        return false;
    }
    return std::visit(Overloaded{
                          [](const family::Box&) { return true; },
                          [](const family::SincBox&) { return true; },
                          [this](const family::BesselJ0&) { return lo_ == 0.0 && hi_ == 1.0; },
                          [this](const family::MovingAverage&) { return lo_ == 0.0 && hi_ == kPi; },
                          [](const auto&) { return false; },
                      },
                      family_);
}

std::pair<double, double> DensityPiece::trig_moments(double a, double b, double t) const
{
    const double l = std::max(a, lo_);
    const double r = std::min(b, hi_);
    if (!(r > l) || empty()) {
        return {0.0, 0.0};
    }
    if (multipliers_.empty()) {
        double height = -1.0;
        if (const auto* box = std::get_if<family::Box>(&family_)) {
            height = box->height;
        } else if (std::holds_alternative<family::SincBox>(family_)) {
            height = 1.0 / kTwoPi;
        }
        if (height >= 0.0) {
            const double h = weight_ * height;
            if (t == 0.0) {
                return {h * (r - l), 0.0};
            }
            return {h * (std::sin(r * t) - std::sin(l * t)) / t,
                    h * (std::cos(l * t) - std::cos(r * t)) / t};
        }
    }
    return {integrate(l, r, Kernel::cosine(t)), integrate(l, r, Kernel::sine(t))};
}

double DensityPiece::covariance(double t) const
{
    if (!std::isfinite(t)) {
        throw ArgumentError("covariance: t must be finite");
    }
    if (empty()) {
        return 0.0;
    }
    t = std::abs(t);
    if (closed_form_covariance()) {
        return std::visit(
            Overloaded{
                [this, t](const family::BesselJ0&) { return weight_ * std::cyl_bessel_j(0.0, t); },
                [this, t](const family::MovingAverage& m) {
                    double s = m.autocorrelation[0] * cosine_integral_pi(t);
                    for (std::size_t k = 1; k < m.autocorrelation.size(); ++k) {
                        const double kk = static_cast<double>(k);
                        s += m.autocorrelation[k] * (cosine_integral_pi(t - kk) + cosine_integral_pi(t + kk));
                    }
                    return weight_ * s / kPi;
                },
                [this, t](const auto&) { return 2.0 * trig_moments(lo_, hi_, t).first; },
            },
            family_);
    }
    return 2.0 * integrate(lo_, hi_, Kernel::cosine(t));
}

std::vector<double> DensityPiece::parameters() const
{
    return std::visit(
        Overloaded{
            [](const family::Box& b) { return std::vector<double>{b.height}; },
            [](const family::Counterexample& c) {
                return std::vector<double>{c.a, c.b, c.mode == Oscillation::reciprocal ? 0.0 : 1.0};
            },
            [](const family::NonconvTail& t) { return std::vector<double>{static_cast<double>(t.peaks)}; },
            [](const family::Tabulated& t) {
                std::vector<double> v = t.lambda;
                v.insert(v.end(), t.value.begin(), t.value.end());
                return v;
            },
            [](const family::MovingAverage& m) { return m.weights; },
            [](const family::Folded& f) { return std::vector<double>{f.shift}; },
            [](const auto&) { return std::vector<double>{}; },
        },
        family_);
}

bool DensityPiece::same_as(const DensityPiece& other) const
{
    if (family_.index() != other.family_.index() || family_name() != other.family_name() ||
        lo_ != other.lo_ || hi_ != other.hi_ || weight_ != other.weight_ ||
        multipliers_ != other.multipliers_ || parameters() != other.parameters()) {
        return false;
    }
    if (const auto* f = std::get_if<family::Folded>(&family_)) {
        const auto& g = std::get<family::Folded>(other.family_);
        return f->base == g.base || f->base->same_as(*g.base);
    }
    return true;
}

DensityPiece DensityPiece::restricted(double lo, double hi) const
{
    DensityPiece p = *this;
    p.lo_ = std::max(lo_, lo);
    p.hi_ = std::min(hi_, hi);
    if (!(p.hi_ > p.lo_)) {
        p.hi_ = p.lo_;
    }
    return p;
}

DensityPiece DensityPiece::with_multiplier(const Multiplier& m) const
{
    DensityPiece p = *this;
    if (m.kind() == Multiplier::Kind::constant) {
        p.weight_ *= m.parameter() * m.parameter();
    } else {
        p.multipliers_.push_back(m);
    }
    return p;
}

DensityPiece DensityPiece::scaled(double c) const
{
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw ArgumentError("scaled: factor must be finite and nonnegative");
    }
    DensityPiece p = *this;
    p.weight_ *= c;
    return p;
}

} // namespace pershlab::spectral
