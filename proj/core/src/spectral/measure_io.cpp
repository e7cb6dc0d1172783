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

#include "pershlab/spectral/measure_io.hpp"

#include <fstream>
#include <memory>
#include <set>
#include <string>

#include "pershlab/error.hpp"
#include "pershlab/spectral/builtins.hpp"
#include "pershlab/spectral/diagnostics.hpp"

namespace pershlab::spectral {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ArgumentError("measure: " + where + ": " + what);
}

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed)
{
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            fail(where, "unknown key '" + key + "'");
        }
    }
}

double number(const json& obj, const std::string& key, const std::string& where)
{
    if (!obj.contains(key)) {
        fail(where, "missing '" + key + "'");
    }
    const json& v = obj.at(key);
    if (!v.is_number()) {
        fail(where + "." + key, "expected a number");
    }
    return v.get<double>();
}

std::vector<double> numbers(const json& obj, const std::string& key, const std::string& where)
{
    if (!obj.contains(key) || !obj.at(key).is_array()) {
        fail(where, "missing array '" + key + "'");
    }
    std::vector<double> out;
    for (const auto& v : obj.at(key)) {
        if (!v.is_number()) {
            fail(where + "." + key, "expected numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

DensityPiece piece_from_json(const json& part, const std::string& where)
{
    check_keys(part, where, {"family", "params", "support", "multipliers", "weight"});
    if (!part.contains("family") || !part.at("family").is_string()) {
        fail(where, "missing string 'family'");
    }
    const std::string family = part.at("family").get<std::string>();
    const json params = part.value("params", json::object());
    const std::string pw = where + ".params";
    std::optional<std::pair<double, double>> support;
    if (part.contains("support")) {
        const auto s = numbers(part, "support", where);
        if (s.size() != 2) {
            fail(where + ".support", "expected [lo, hi]");
        }
        support = std::make_pair(s[0], s[1]);
    }
    const auto need_support = [&]() {
        if (!support) {
            fail(where, "family '" + family + "' requires 'support'");
        }
        return *support;
    };

    std::optional<DensityPiece> piece;
    try {
        if (family == "box" || family == "gap_box") {
            check_keys(params, pw, {"height"});
            const auto [lo, hi] = need_support();
            piece = family == "box" ? DensityPiece::box(number(params, "height", pw), lo, hi)
                                    : DensityPiece::gap_box(number(params, "height", pw), lo, hi);
            support.reset();
        } else if (family == "sinc_box") {
            check_keys(params, pw, {});
            piece = DensityPiece::sinc_box();
        } else if (family == "bessel_j0") {
            check_keys(params, pw, {});
            piece = DensityPiece::bessel_j0();
        } else if (family == "counterexample") {
            check_keys(params, pw, {"a", "b", "mode"});
            const std::string mode = params.value("mode", std::string("reciprocal"));
            if (mode != "reciprocal" && mode != "log_reciprocal") {
                fail(pw + ".mode", "expected 'reciprocal' or 'log_reciprocal'");
            }
            piece = DensityPiece::counterexample(
                number(params, "a", pw), number(params, "b", pw),
                mode == "reciprocal" ? Oscillation::reciprocal : Oscillation::log_reciprocal);
        } else if (family == "nonconv_tail") {
            check_keys(params, pw, {"peaks"});
            std::optional<int> peaks;
            if (params.contains("peaks")) {
                if (!params.at("peaks").is_number_integer()) {
                    fail(pw + ".peaks", "expected an integer");
                }
                peaks = params.at("peaks").get<int>();
            }
            piece = DensityPiece::nonconv_tail(peaks);
        } else if (family == "tabulated") {
            check_keys(params, pw, {"lambda", "value"});
            piece = DensityPiece::tabulated(numbers(params, "lambda", pw), numbers(params, "value", pw));
        } else if (family == "ma_density") {
            check_keys(params, pw, {"weights"});
            piece = DensityPiece::moving_average(numbers(params, "weights", pw));
        } else if (family == "folded") {
            check_keys(params, pw, {"base", "shift", "half_period"});
            if (!params.contains("base")) {
                fail(pw, "missing 'base'");
            }
            auto base = std::make_shared<const DensityPiece>(piece_from_json(params.at("base"), pw + ".base"));
            piece = DensityPiece::folded(std::move(base), number(params, "shift", pw),
                                         number(params, "half_period", pw));
        } else {
            fail(where + ".family", "unknown family '" + family + "'");
        }
    } catch (const ArgumentError& e) {
        const std::string msg = e.what();
        if (msg.rfind("measure:", 0) == 0) {
            throw;
        }
        fail(where, msg);
    }

    if (support) {
        if (!(support->first >= 0.0) || !(support->second > support->first)) {
            fail(where + ".support", "need 0 <= lo < hi");
        }
        piece = piece->restricted(support->first, support->second);
    }
    if (part.contains("weight")) {
        piece = piece->scaled(number(part, "weight", where));
    }
    if (part.contains("multipliers")) {
        if (!part.at("multipliers").is_array()) {
            fail(where + ".multipliers", "expected an array");
        }
        int i = 0;
        for (const auto& m : part.at("multipliers")) {
            const std::string mw = where + ".multipliers[" + std::to_string(i++) + "]";
            check_keys(m, mw, {"tag", "param"});
            if (!m.contains("tag") || !m.at("tag").is_string()) {
                fail(mw, "missing string 'tag'");
            }
            try {
                piece = piece->with_multiplier(
                    Multiplier::from_tag(m.at("tag").get<std::string>(), number(m, "param", mw)));
            } catch (const ArgumentError& e) {
                const std::string msg = e.what();
                if (msg.rfind("measure:", 0) == 0) {
                    throw;
                }
                fail(mw, msg);
            }
        }
    }
    return *piece;
}

json piece_to_json(const DensityPiece& p)
{
    json part;
    part["family"] = p.family_name();
    json params = json::object();
    std::visit(
        [&params](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, family::Box>) {
                params["height"] = f.height;
            } else if constexpr (std::is_same_v<T, family::Counterexample>) {
                params["a"] = f.a;
                params["b"] = f.b;
                params["mode"] = f.mode == Oscillation::reciprocal ? "reciprocal" : "log_reciprocal";
            } else if constexpr (std::is_same_v<T, family::NonconvTail>) {
                params["peaks"] = f.peaks;
            } else if constexpr (std::is_same_v<T, family::Tabulated>) {
                params["lambda"] = f.lambda;
                params["value"] = f.value;
            } else if constexpr (std::is_same_v<T, family::MovingAverage>) {
                params["weights"] = f.weights;
            } else if constexpr (std::is_same_v<T, family::Folded>) {
                params["base"] = piece_to_json(*f.base);
                params["shift"] = f.shift;
            }
        },
        p.family());
    if (std::holds_alternative<family::Folded>(p.family())) {
        // the folded support starts as [0, half_period]
        params["half_period"] = p.hi();
    }
    part["params"] = params;
    part["support"] = {p.lo(), p.hi()};
    if (p.weight() != 1.0) {
        part["weight"] = p.weight();
    }
    if (!p.multipliers().empty()) {
        json ms = json::array();
        for (const auto& m : p.multipliers()) {
            ms.push_back({{"tag", m.tag()}, {"param", m.parameter()}});
        }
        part["multipliers"] = ms;
    }
    return part;
}

} // namespace

SpectralMeasure measure_from_json(const json& doc)
{
    if (doc.is_string()) {
        return builtins::by_name(doc.get<std::string>());
    }
    check_keys(doc, "document", {"name", "scale", "ac_parts", "atoms"});
    std::vector<DensityPiece> pieces;
    if (doc.contains("ac_parts")) {
        if (!doc.at("ac_parts").is_array()) {
            fail("ac_parts", "expected an array");
        }
        int i = 0;
        for (const auto& part : doc.at("ac_parts")) {
            pieces.push_back(piece_from_json(part, "ac_parts[" + std::to_string(i++) + "]"));
        }
    }
    std::vector<Atom> atoms;
    if (doc.contains("atoms")) {
        if (!doc.at("atoms").is_array()) {
            fail("atoms", "expected an array");
        }
        int i = 0;
        for (const auto& a : doc.at("atoms")) {
            const std::string aw = "atoms[" + std::to_string(i++) + "]";
            check_keys(a, aw, {"lambda", "mass"});
            atoms.push_back({number(a, "lambda", aw), number(a, "mass", aw)});
        }
    }
    const double scale = doc.contains("scale") ? number(doc, "scale", "document") : 1.0;
    std::string name;
    if (doc.contains("name")) {
        if (!doc.at("name").is_string()) {
            fail("name", "expected a string");
        }
        name = doc.at("name").get<std::string>();
    }
    try {
        return {std::move(pieces), std::move(atoms), scale, name};
    } catch (const ArgumentError& e) {
        fail("document", e.what());
    }
}

json measure_to_json(const SpectralMeasure& measure)
{
    json doc;
    if (!measure.name().empty()) {
        doc["name"] = measure.name();
    }
    doc["scale"] = measure.scale();
    json parts = json::array();
    for (const auto& p : measure.pieces()) {
        parts.push_back(piece_to_json(p));
    }
    doc["ac_parts"] = parts;
    json atoms = json::array();
    for (const auto& a : measure.atoms()) {
        atoms.push_back({{"lambda", a.lambda}, {"mass", a.mass}});
    }
    doc["atoms"] = atoms;
    return doc;
}

SpectralMeasure load_measure(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot open measure file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ArgumentError(path.string() + ": " + e.what());
    }
    return measure_from_json(doc);
}

void save_measure(const std::filesystem::path& path, const SpectralMeasure& measure)
{
    std::ofstream out(path);
    if (!out) {
        throw ArgumentError("cannot write measure file " + path.string());
    }
    out << measure_to_json(measure).dump(2) << '\n';
}

json describe_measure(const SpectralMeasure& measure)
{
    json d;
    d["name"] = measure.name();
    d["total_mass"] = measure.total_mass();
    d["support_radius"] = measure.support_radius();
    d["pieces"] = measure.pieces().size();
    d["atoms"] = measure.atoms().size();
    json cov = json::array();
    for (double t : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        cov.push_back({{"t", t}, {"r", measure.covariance(t)}});
    }
    d["covariance"] = cov;
    const auto grid = default_origin_grid();
    const auto origin = origin_density(measure, grid);
    json o{{"status", to_string(origin.status)}};
    if (origin.status == OriginStatus::finite) {
        o["value"] = origin.value;
    } else if (origin.status == OriginStatus::oscillating) {
        o["liminf"] = origin.liminf;
        o["limsup"] = origin.limsup;
    }
    d["origin_density"] = o;
    d["document"] = measure_to_json(measure);
    return d;
}

} // namespace pershlab::spectral
