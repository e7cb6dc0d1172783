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
#include <functional>
#include <span>

namespace pershlab::oracles {

using Integrand = std::function<double(double)>;

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    // Largest angular frequency of the integrand. When positive, the initial
    // panels are no wider than pi / (4 * oscillation).
    double oscillation = 0.0;
    int max_depth = 40;
    std::size_t max_panels = 200000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
};

/// Single 16-point Gauss-Legendre panel on [a, b].
double gauss_legendre16(const Integrand& f, double a, double b);

/// Globally adaptive Gauss-Legendre quadrature.
///
/// Each panel is scored by |GL16(panel) - GL16(left) - GL16(right)| and the
/// worst panel is bisected until the summed score is within
/// max(abs_tol, rel_tol * |value|). Breakpoints inside (a, b) always start a
/// new panel; use them for kinks, jumps and endpoint singularities of the
/// integrand. Panels stop splitting at max_depth bisections.
///
/// Throws AccuracyError carrying the achieved bound when the tolerance cannot
/// be met.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& options = {},
                           std::span<const double> breakpoints = {});

} // namespace pershlab::oracles
