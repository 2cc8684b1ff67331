#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "modelatom/scenario.hpp"

using namespace modelatom;

int main(int argc, char** argv) {
    CLI::App app{"Two-particle harmonic model atom under a sech² confinement pulse"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "flat 'key = value' file; flags override it")->check(CLI::ExistingFile);

    const char* value_flags[][2] = {
        {"omega0", "confinement frequency"},
        {"lambda", "interaction strength in [0, 0.5)"},
        {"Lambda", "signed pulse strength, fractions like 2/9 accepted"},
        {"beta", "inverse pulse duration"},
        {"shape", "pulse shape (sech2)"},
        {"beta-min", "sweep lower bound"},
        {"beta-max", "sweep upper bound"},
        {"beta-points", "log-spaced sweep points"},
        {"v-min", "figure 3 lower velocity"},
        {"v-max", "figure 3 upper velocity"},
        {"v-points", "figure 3 velocity points"},
        {"grid-points", "spatial grid points"},
        {"k-max", "largest occupation index"},
        {"time-points", "evolve output times"},
        {"route", "reflection route: analytic or ode"},
        {"rtol", "integrator relative tolerance"},
        {"atol", "integrator absolute tolerance"},
        {"trajectory-out", "evolve: write raw trajectory CSV here"},
        {"trajectory-mode", "evolve: trajectory to export (1, 2 or d)"},
        {"out", "output file; stdout when omitted"},
        {"format", "csv or json"},
    };
    std::map<std::string, std::string> flags;
    for (const auto& [name, help] : value_flags)
        app.add_option("--" + std::string(name), flags[name], help);
    bool density = false;
    app.add_flag("--density", density, "static: emit densities instead of the occupation spectrum");

    app.add_subcommand("modes", "frequencies and constants of the static model");
    app.add_subcommand("static", "occupation spectrum, entropies and densities");
    app.add_subcommand("evolve", "time-dependent one-matrix parameters during the pulse");
    app.add_subcommand("shift", "energy shifts and related observables at one beta");
    app.add_subcommand("sweep", "energy shifts over a log-spaced beta grid");
    int figure = 0;
    app.add_subcommand("figure", "figure data sets 1, 2 or 3")
        ->add_option("number", figure, "figure number")
        ->required()
        ->check(CLI::Range(1, 3));
    app.add_subcommand("validate", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_config;
    }

    ScenarioConfig cfg;
    try {
        const std::string sub = app.get_subcommands().front()->get_name();
        if (sub == "figure") cfg = figure_preset(figure);
        else cfg.kind = parse_run_kind(sub);

        if (!config_path.empty())
            for (const auto& [key, value] : read_config_file(config_path)) apply_setting(cfg, key, value);
        for (const auto& [name, help] : value_flags) {
            (void)help;
            if (app.count("--" + std::string(name)) > 0) apply_setting(cfg, name, flags[name]);
        }
        if (density) cfg.density = true;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
    return run(cfg, std::cout, std::cerr);
}
