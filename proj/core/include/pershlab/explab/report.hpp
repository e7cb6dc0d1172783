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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pershlab/estimator/estimate.hpp"

namespace pershlab::explab {

inline constexpr std::string_view kCsvHeader =
    "kind,T,level,delta,n_paths,hits,p_hat,ci_lo,ci_hi,theta_hat,theta_lo,theta_hi,seed,flags";

/// One checked inequality or expectation.
struct Verdict {
    std::string name;
    bool holds = true;
    std::string detail;
};

struct Report {
    std::string experiment;
    std::string config_hash;
    std::vector<estimator::ExponentEstimate> rows;
    nlohmann::json summary = nlohmann::json::object();
    std::vector<Verdict> verdicts;

    bool all_hold() const;
};

/// Shortest decimal text that parses back to the same double; "inf",
/// "-inf" and "nan" for non-finite values.
std::string format_number(double x);
double parse_number(std::string_view text);

/// JSON number, or its format_number string when not finite.
nlohmann::json number_json(double x);

/// Row flags carry an optional "series:<label>" entry used as the plot
/// legend; the label is sanitized so it survives the CSV.
void set_series(estimator::ExponentEstimate& row, std::string_view label);
std::string series_of(const estimator::ExponentEstimate& row);

std::string report_csv(const Report& report);
std::vector<estimator::ExponentEstimate> parse_report_csv(std::string_view text);

/// Same row fields as the CSV; non-finite numbers become strings.
nlohmann::json report_json(const Report& report);
Report parse_report_json(const nlohmann::json& doc);

/// Writes <dir>/<stem>.csv and <dir>/<stem>.json, creating dir.
void write_report(const Report& report, const std::filesystem::path& dir, const std::string& stem);

} // namespace pershlab::explab
