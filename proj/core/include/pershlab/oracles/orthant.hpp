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

#include <span>

#include <Eigen/Core>

namespace pershlab::oracles {

inline constexpr int kMaxOrthantDimension = 4;

/// P(lower <= X <= upper) for a centered Gaussian vector X with the given
/// covariance (d <= 4). Bounds may be infinite.
///
/// X = L Z with L the Cholesky factor; the first d - 1 coordinates of Z are
/// integrated by nested adaptive quadrature against the normal density and
/// the last one in closed form. Absolute accuracy is about 1e-9.
///
/// Throws ArgumentError for d > 4, mismatched bounds, lower > upper, or a
/// covariance that is not symmetric positive definite.
double gaussian_box_probability(const Eigen::MatrixXd& covariance,
                                std::span<const double> lower,
                                std::span<const double> upper);

/// Symmetric box |X_i| <= half_width[i].
double gaussian_symmetric_box_probability(const Eigen::MatrixXd& covariance,
                                          std::span<const double> half_width);

} // namespace pershlab::oracles
