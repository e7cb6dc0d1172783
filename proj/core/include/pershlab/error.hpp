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

#include <stdexcept>
#include <string>

namespace pershlab {

/// Invalid input: bad parameter values, malformed grids, unknown tags.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation's documented precondition does not hold for otherwise valid input.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The requested operation is not available for this representation.
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Quadrature could not reach its tolerance. Carries the bound it did reach.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved error bound " + std::to_string(achieved) + ")"),
          achieved_(achieved)
    {
    }

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// Matrix factorization failed. Carries the smallest eigenvalue of the input.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double min_eigenvalue)
        : std::runtime_error(what + " (min eigenvalue " + std::to_string(min_eigenvalue) + ")"),
          min_eigenvalue_(min_eigenvalue)
    {
    }

    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

} // namespace pershlab
