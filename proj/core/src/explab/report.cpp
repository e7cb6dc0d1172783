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

#include "pershlab/explab/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "pershlab/error.hpp"

namespace pershlab::explab {

namespace {

using estimator::ExponentEstimate;
using nlohmann::json;

constexpr std::string_view kSeriesPrefix = "series:";

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::string join_flags(const std::vector<std::string>& flags)
{
    std::string s;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        s += (i ? ";" : "") + flags[i];
    }
    return s;
}

std::vector<std::string> split_flags(std::string_view text)
{
    std::vector<std::string> out;
    if (text.empty()) {
        return out;
    }
    for (auto f : split(text, ';')) {
        out.emplace_back(f);
    }
    return out;
}

template <class T>
T parse_integer(std::string_view text, const char* field)
{
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ArgumentError(std::string("report: bad integer in ") + field);
    }
    return value;
}

double json_number(const json& v)
{
    if (v.is_string()) {
        return parse_number(v.get<std::string>());
    }
    if (!v.is_number()) {
        throw ArgumentError("report: expected a number");
    }
    return v.get<double>();
}

} // namespace

bool Report::all_hold() const
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

json number_json(double x)
{
    if (std::isfinite(x)) {
        return x;
    }
    return format_number(x);
}

std::string format_number(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

double parse_number(std::string_view text)
{
    if (text == "nan") {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (text == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (text == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ArgumentError("report: bad number '" + std::string(text) + "'");
    }
    return x;
}

void set_series(ExponentEstimate& row, std::string_view label)
{
    std::string clean(label);
    std::replace_if(
        clean.begin(), clean.end(),
        [](char c) { return c == ',' || c == ';' || c == '"' || c == '\n' || c == '\r'; }, '_');
    std::erase_if(row.flags, [](const std::string& f) { return f.starts_with(kSeriesPrefix); });
    row.flags.push_back(std::string(kSeriesPrefix) + clean);
}

std::string series_of(const ExponentEstimate& row)
{
    for (const auto& f : row.flags) {
        if (f.starts_with(kSeriesPrefix)) {
            return f.substr(kSeriesPrefix.size());
        }
    }
    return estimator::to_string(row.kind);
}

std::string report_csv(const Report& report)
{
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : report.rows) {
        out << estimator::to_string(r.kind) << ',' << format_number(r.horizon) << ','
            << format_number(r.level) << ',' << format_number(r.delta) << ',' << r.n_paths << ','
            << r.hits << ',' << format_number(r.p_hat) << ',' << format_number(r.ci_lo) << ','
            << format_number(r.ci_hi) << ',' << format_number(r.theta_hat) << ','
            << format_number(r.theta_lo) << ',' << format_number(r.theta_hi) << ',' << r.seed
            << ',' << join_flags(r.flags) << '\n';
    }
    return out.str();
}

std::vector<ExponentEstimate> parse_report_csv(std::string_view text)
{
    auto lines = split(text, '\n');
    if (lines.empty() || lines.front() != kCsvHeader) {
        throw ArgumentError("report: missing or unexpected CSV header");
    }
    std::vector<ExponentEstimate> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) {
            continue;
        }
        const auto f = split(lines[i], ',');
        if (f.size() != 14) {
            throw ArgumentError("report: line " + std::to_string(i + 1) + " has " +
                                std::to_string(f.size()) + " fields, expected 14");
        }
        ExponentEstimate r;
        r.kind = estimator::parse_estimate_kind(std::string(f[0]));
        r.horizon = parse_number(f[1]);
        r.level = parse_number(f[2]);
        r.delta = parse_number(f[3]);
        r.n_paths = parse_integer<std::size_t>(f[4], "n_paths");
        r.hits = parse_integer<std::size_t>(f[5], "hits");
        r.p_hat = parse_number(f[6]);
        r.ci_lo = parse_number(f[7]);
        r.ci_hi = parse_number(f[8]);
        r.theta_hat = parse_number(f[9]);
        r.theta_lo = parse_number(f[10]);
        r.theta_hi = parse_number(f[11]);
        r.seed = parse_integer<std::uint64_t>(f[12], "seed");
        r.flags = split_flags(f[13]);
        rows.push_back(std::move(r));
    }
    return rows;
}

json report_json(const Report& report)
{
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"kind", estimator::to_string(r.kind)},
                        {"T", number_json(r.horizon)},
                        {"level", number_json(r.level)},
                        {"delta", number_json(r.delta)},
                        {"n_paths", r.n_paths},
                        {"hits", r.hits},
                        {"p_hat", number_json(r.p_hat)},
                        {"ci_lo", number_json(r.ci_lo)},
                        {"ci_hi", number_json(r.ci_hi)},
                        {"theta_hat", number_json(r.theta_hat)},
                        {"theta_lo", number_json(r.theta_lo)},
                        {"theta_hi", number_json(r.theta_hi)},
                        {"seed", r.seed},
                        {"flags", join_flags(r.flags)}});
    }
    json verdicts = json::array();
    for (const auto& v : report.verdicts) {
        verdicts.push_back({{"name", v.name}, {"holds", v.holds}, {"detail", v.detail}});
    }
    return {{"experiment", report.experiment},
            {"config_hash", report.config_hash},
            {"rows", rows},
            {"summary", report.summary},
            {"verdicts", verdicts}};
}

Report parse_report_json(const json& doc)
{
    Report report;
    try {
        report.experiment = doc.at("experiment").get<std::string>();
        report.config_hash = doc.at("config_hash").get<std::string>();
        report.summary = doc.at("summary");
        for (const auto& r : doc.at("rows")) {
            ExponentEstimate e;
            e.kind = estimator::parse_estimate_kind(r.at("kind").get<std::string>());
            e.horizon = json_number(r.at("T"));
            e.level = json_number(r.at("level"));
            e.delta = json_number(r.at("delta"));
            e.n_paths = r.at("n_paths").get<std::size_t>();
            e.hits = r.at("hits").get<std::size_t>();
            e.p_hat = json_number(r.at("p_hat"));
            e.ci_lo = json_number(r.at("ci_lo"));
            e.ci_hi = json_number(r.at("ci_hi"));
            e.theta_hat = json_number(r.at("theta_hat"));
            e.theta_lo = json_number(r.at("theta_lo"));
            e.theta_hi = json_number(r.at("theta_hi"));
            e.seed = r.at("seed").get<std::uint64_t>();
            e.flags = split_flags(r.at("flags").get<std::string>());
            report.rows.push_back(std::move(e));
        }
        for (const auto& v : doc.at("verdicts")) {
            report.verdicts.push_back({v.at("name").get<std::string>(), v.at("holds").get<bool>(),
                                       v.at("detail").get<std::string>()});
        }
    } catch (const json::exception& e) {
        throw ArgumentError(std::string("report: ") + e.what());
    }
    return report;
}

void write_report(const Report& report, const std::filesystem::path& dir, const std::string& stem)
{
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / (stem + ".csv"), std::ios::binary);
        out << report_csv(report);
        if (!out) {
            throw ArgumentError("cannot write " + (dir / (stem + ".csv")).string());
        }
    }
    std::ofstream out(dir / (stem + ".json"), std::ios::binary);
    out << report_json(report).dump(2) << '\n';
    if (!out) {
        throw ArgumentError("cannot write " + (dir / (stem + ".json")).string());
    }
}

} // namespace pershlab::explab
