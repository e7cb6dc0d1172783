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

// pershlab command-line front end.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pershlab/error.hpp"
#include "pershlab/explab/config.hpp"
#include "pershlab/explab/runner.hpp"
#include "pershlab/spectral/measure_io.hpp"
#include "pershlab/spectral/operations.hpp"

namespace {

namespace ex = pershlab::explab;
namespace sp = pershlab::spectral;

struct ExperimentArgs {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> paths;
    std::optional<std::string> out;
    bool plot = false;
};

int run_experiment(const std::string& name, const ExperimentArgs& args)
{
    auto config = ex::load_config(args.config);
    if (ex::to_string(config.experiment) != name) {
        throw pershlab::ArgumentError("config " + args.config + " describes experiment '" +
                                      ex::to_string(config.experiment) + "', not '" + name + "'");
    }
    ex::RunOptions options;
    options.seed = args.seed;
    options.n_paths = args.paths;
    if (args.out) {
        options.out_dir = *args.out;
    }
    options.plot = args.plot;
    const auto outcome = ex::run(std::move(config), options, std::cout);
    for (const auto& f : outcome.files) {
        std::cout << "wrote " << f.string() << '\n';
    }
    return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pershlab: spectral measures, exact Gaussian path simulation and "
                 "persistence / ball exponent estimates"};
    app.footer("Environment: PERSHLAB_THREADS caps the number of worker threads.\n"
               "Exit codes: 0 success, 2 an inequality verdict failed, 1 error.");
    app.require_subcommand(1);

    ExperimentArgs args;
    for (const auto& name : ex::experiment_names()) {
        auto* cmd = app.add_subcommand(name, "run the " + name + " experiment");
        cmd->add_option("--config", args.config, "experiment config (JSON)")->required();
        cmd->add_option("--seed", args.seed, "override the config seed");
        cmd->add_option("--paths", args.paths, "override the number of paths");
        cmd->add_option("--out", args.out, "output directory");
        cmd->add_flag("--plot", args.plot, "also write an SVG plot");
    }

    auto* measure = app.add_subcommand("measure", "measure utilities");
    measure->require_subcommand(1);
    std::string show_file;
    auto* show = measure->add_subcommand("show", "print a summary of a measure file");
    show->add_option("file", show_file, "measure JSON file")->required();

    std::string fold_file;
    double fold_delta = 0.0;
    auto* fold = app.add_subcommand("fold", "fold a measure at sampling step delta");
    fold->add_option("file", fold_file, "measure JSON file")->required();
    fold->add_option("--delta", fold_delta, "sampling step")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (show->parsed()) {
            const auto m = sp::load_measure(show_file);
            std::cout << sp::describe_measure(m).dump(2) << '\n';
            return 0;
        }
        if (fold->parsed()) {
            const auto m = sp::load_measure(fold_file);
            const auto folded = sp::fold(m, fold_delta);
            const nlohmann::json out{{"delta", fold_delta},
                                     {"mass", m.total_mass()},
                                     {"folded_mass", folded.total_mass()},
                                     {"folded", sp::measure_to_json(folded)}};
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        for (auto* cmd : app.get_subcommands()) {
            return run_experiment(cmd->get_name(), args);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
