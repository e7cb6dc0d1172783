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

#include <filesystem>
#include <string>

#include "pershlab/explab/report.hpp"

namespace pershlab::explab {

struct PlotStyle {
    int width = 720;
    int height = 480;
    std::string title;
};

/// SVG of theta_hat against T (against delta for sampled rows) with the
/// confidence band of each series; a series with one point gets a marker
/// and whisker. Output depends only on the rows and style. Throws
/// ArgumentError for a report without rows.
std::string render_svg(const Report& report, const PlotStyle& style = {});

void emit_plot(const Report& report, const std::filesystem::path& file,
               const PlotStyle& style = {});

} // namespace pershlab::explab
