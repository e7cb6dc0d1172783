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

namespace pershlab::explab {

/// lhs <relation> rhs, checked with an absolute slack.
struct InequalityCheck {
    std::string name;
    std::string relation; // "<=", ">=" or "=="
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = false;
};

/// Oracle-level checks without Monte Carlo noise: Gaussian tail bounds,
/// Khatri-Sidak, Slepian, Anderson and Gaussian correlation on small boxes
/// (orthant quadrature, d <= 4), and the cosine-process symmetry.
/// `inject_failure` appends a deliberately reversed Khatri-Sidak check.
std::vector<InequalityCheck> run_inequality_suite(bool inject_failure = false);

} // namespace pershlab::explab
