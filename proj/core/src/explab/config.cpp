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

#include "pershlab/explab/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "pershlab/error.hpp"
#include "pershlab/spectral/measure_io.hpp"

namespace pershlab::explab {

namespace {

using nlohmann::json;

const std::vector<std::string>& kind_names()
{
    static const std::vector<std::string> names{
        "exponent_curve", "level_sweep",   "delta_sweep",    "tv_perturbation",
        "singular_indifference", "smoothing", "counterexample", "fold_report",
        "verify_inequalities"};
    return names;
}

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
    throw ArgumentError("config field '" + field + "': " + what);
}

void only_keys(const json& obj, const std::string& field, const std::set<std::string>& allowed)
{
    if (!obj.is_object()) {
        fail(field, "expected an object");
    }
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            fail(field.empty() ? key : field + "." + key, "unknown key");
        }
    }
}

double number(const json& v, const std::string& field)
{
    if (!v.is_number()) {
        fail(field, "expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        fail(field, "must be finite");
    }
    return x;
}

double positive(const json& v, const std::string& field)
{
    const double x = number(v, field);
    if (!(x > 0.0)) {
        fail(field, "must be positive");
    }
    return x;
}

std::uint64_t unsigned_integer(const json& v, const std::string& field)
{
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
        fail(field, "expected a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

std::vector<double> number_list(const json& v, const std::string& field, bool need_positive)
{
    if (!v.is_array() || v.empty()) {
        fail(field, "expected a nonempty array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        out.push_back(need_positive ? positive(v[i], f) : number(v[i], f));
    }
    return out;
}

void increasing(const std::vector<double>& xs, const std::string& field)
{
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) {
            fail(field, "must be strictly increasing");
        }
    }
}

// Resolves {"file": path} references; returns the measure and its canonical
// inline document.
std::pair<spectral::SpectralMeasure, json> measure_field(const json& v, const std::string& field,
                                                         const std::filesystem::path& base_dir)
{
    std::optional<std::filesystem::path> file;
    if (v.is_object() && v.contains("file")) {
        only_keys(v, field, {"file"});
        if (!v["file"].is_string()) {
            fail(field + ".file", "expected a path string");
        }
        file = v["file"].get<std::string>();
        if (file->is_relative()) {
            file = base_dir / *file;
        }
    }
    try {
        auto m = file ? spectral::load_measure(*file) : spectral::measure_from_json(v);
        auto canon = spectral::measure_to_json(m);
        return {std::move(m), std::move(canon)};
    } catch (const ArgumentError& e) {
        fail(field, e.what());
    }
}

bool needs_measure(ExperimentKind k)
{
    return k != ExperimentKind::counterexample && k != ExperimentKind::verify_inequalities;
}

bool needs_perturbation(ExperimentKind k)
{
    return k == ExperimentKind::tv_perturbation || k == ExperimentKind::singular_indifference ||
           k == ExperimentKind::smoothing;
}

bool needs_horizons(ExperimentKind k)
{
    return k != ExperimentKind::fold_report && k != ExperimentKind::verify_inequalities;
}

} // namespace

std::string to_string(ExperimentKind kind)
{
    return kind_names()[static_cast<std::size_t>(kind)];
}

ExperimentKind parse_experiment_kind(const std::string& text)
{
    const auto& names = kind_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == text) {
            return static_cast<ExperimentKind>(i);
        }
    }
    throw ArgumentError("unknown experiment '" + text + "'");
}

std::vector<std::string> experiment_names()
{
    return kind_names();
}

std::string fnv1a64_hex(const std::string& text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string ExperimentConfig::hash() const
{
    return fnv1a64_hex(document.dump());
}

ExperimentConfig config_from_json(const json& doc, const std::filesystem::path& base_dir)
{
    only_keys(doc, "",
              {"experiment", "description", "measure", "perturbation", "event", "levels",
               "horizons", "delta", "deltas", "epsilons", "n_paths", "seed", "fejer_width",
               "multiplier", "counterexample", "beta", "origin_grid", "output", "tolerances",
               "inject_failure"});
    if (!doc.contains("experiment") || !doc["experiment"].is_string()) {
        fail("experiment", "required string");
    }
    ExperimentConfig c;
    c.document = doc;
    try {
        c.experiment = parse_experiment_kind(doc["experiment"].get<std::string>());
    } catch (const ArgumentError& e) {
        fail("experiment", e.what());
    }
    c.stem = to_string(c.experiment);

    if (doc.contains("description") && !doc["description"].is_string()) {
        fail("description", "expected a string");
    }
    if (doc.contains("measure")) {
        auto [m, canon] = measure_field(doc["measure"], "measure", base_dir);
        c.measure = std::move(m);
        c.document["measure"] = std::move(canon);
    } else if (needs_measure(c.experiment)) {
        fail("measure", "required for " + to_string(c.experiment));
    }
    if (doc.contains("perturbation")) {
        auto [m, canon] = measure_field(doc["perturbation"], "perturbation", base_dir);
        c.perturbation = std::move(m);
        c.document["perturbation"] = std::move(canon);
    } else if (needs_perturbation(c.experiment)) {
        fail("perturbation", "required for " + to_string(c.experiment));
    }
    if (doc.contains("event")) {
        const auto& e = doc["event"];
        if (e == "persistence") {
            c.event = EventKind::persistence;
        } else if (e == "ball") {
            c.event = EventKind::ball;
        } else {
            fail("event", "expected \"persistence\" or \"ball\"");
        }
    }
    if (doc.contains("levels")) {
        c.levels = number_list(doc["levels"], "levels", false);
    }
    if (c.event == EventKind::ball) {
        for (std::size_t i = 0; i < c.levels.size(); ++i) {
            if (!(c.levels[i] > 0.0)) {
                fail("levels[" + std::to_string(i) + "]", "ball levels must be positive");
            }
        }
    }
    if (doc.contains("horizons")) {
        c.horizons = number_list(doc["horizons"], "horizons", true);
        increasing(c.horizons, "horizons");
    } else if (needs_horizons(c.experiment)) {
        fail("horizons", "required for " + to_string(c.experiment));
    }
    if (doc.contains("delta")) {
        c.delta = positive(doc["delta"], "delta");
    }
    if (doc.contains("deltas")) {
        c.deltas = number_list(doc["deltas"], "deltas", true);
    } else if (c.experiment == ExperimentKind::delta_sweep ||
               c.experiment == ExperimentKind::fold_report) {
        fail("deltas", "required for " + to_string(c.experiment));
    }
    if (doc.contains("epsilons")) {
        c.epsilons = number_list(doc["epsilons"], "epsilons", true);
    } else if (c.experiment == ExperimentKind::tv_perturbation) {
        fail("epsilons", "required for tv_perturbation");
    }
    if (doc.contains("n_paths")) {
        c.n_paths = unsigned_integer(doc["n_paths"], "n_paths");
        if (c.n_paths == 0) {
            fail("n_paths", "must be positive");
        }
    }
    if (doc.contains("seed")) {
        c.seed = unsigned_integer(doc["seed"], "seed");
    }
    if (doc.contains("fejer_width")) {
        c.fejer_width = positive(doc["fejer_width"], "fejer_width");
    }
    if (doc.contains("multiplier")) {
        const auto& m = doc["multiplier"];
        only_keys(m, "multiplier", {"tag", "param"});
        if (!m.contains("tag") || !m["tag"].is_string()) {
            fail("multiplier.tag", "required string");
        }
        const double p = m.contains("param") ? number(m["param"], "multiplier.param") : 0.0;
        try {
            c.multiplier = spectral::Multiplier::from_tag(m["tag"].get<std::string>(), p);
        } catch (const ArgumentError& e) {
            fail("multiplier", e.what());
        }
    }
    if (doc.contains("counterexample")) {
        const auto& x = doc["counterexample"];
        only_keys(x, "counterexample", {"a", "b"});
        if (x.contains("a")) {
            c.a = positive(x["a"], "counterexample.a");
        }
        if (x.contains("b")) {
            c.b = positive(x["b"], "counterexample.b");
        }
        if (!(c.a < c.b)) {
            fail("counterexample", "need 0 < a < b");
        }
    }
    if (doc.contains("beta")) {
        c.beta = number(doc["beta"], "beta");
        if (c.beta < 0.0) {
            fail("beta", "must be nonnegative");
        }
    }
    if (doc.contains("origin_grid")) {
        c.origin_grid = number_list(doc["origin_grid"], "origin_grid", true);
        for (std::size_t i = 1; i < c.origin_grid.size(); ++i) {
            if (!(c.origin_grid[i] < c.origin_grid[i - 1])) {
                fail("origin_grid", "must be strictly decreasing");
            }
        }
    }
    if (doc.contains("output")) {
        const auto& o = doc["output"];
        only_keys(o, "output", {"dir", "stem"});
        if (o.contains("dir")) {
            if (!o["dir"].is_string()) {
                fail("output.dir", "expected a string");
            }
            c.out_dir = o["dir"].get<std::string>();
        }
        if (o.contains("stem")) {
            if (!o["stem"].is_string() || o["stem"].get<std::string>().empty()) {
                fail("output.stem", "expected a nonempty string");
            }
            c.stem = o["stem"].get<std::string>();
        }
    }
    if (doc.contains("tolerances")) {
        const auto& t = doc["tolerances"];
        only_keys(t, "tolerances",
                  {"confidence_z", "origin_finite_tolerance", "origin_blowup_factor"});
        if (t.contains("confidence_z")) {
            c.tolerances.confidence_z = positive(t["confidence_z"], "tolerances.confidence_z");
        }
        if (t.contains("origin_finite_tolerance")) {
            c.tolerances.origin_finite_tolerance =
                positive(t["origin_finite_tolerance"], "tolerances.origin_finite_tolerance");
        }
        if (t.contains("origin_blowup_factor")) {
            c.tolerances.origin_blowup_factor =
                positive(t["origin_blowup_factor"], "tolerances.origin_blowup_factor");
        }
    }
    if (doc.contains("inject_failure")) {
        if (!doc["inject_failure"].is_boolean()) {
            fail("inject_failure", "expected a boolean");
        }
        c.inject_failure = doc["inject_failure"].get<bool>();
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot open config " + file.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        std::size_t line = 1;
        for (std::size_t i = 0; i + 1 < upto; ++i) {
            line += text[i] == '\n';
        }
        throw ArgumentError(file.string() + ":" + std::to_string(line) + ": " + e.what());
    }
    return config_from_json(doc, file.parent_path());
}

} // namespace pershlab::explab
