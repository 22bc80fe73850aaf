#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dle/cli.hpp"

namespace {

using dle::cli::Command;
using dle::cli::RunConfig;

void add_common_flags(CLI::App* app, RunConfig& config, std::string& config_path,
                      std::string& unit, std::string& format) {
    app->add_option("--config", config_path, "flat key = value config file (flags win)");
    app->add_option("--omega1", config.omega1, "cavity frequency before the quench");
    app->add_option("--omega2", config.omega2, "cavity frequency after the quench");
    app->add_option("--e0", config.e0, "qubit transition frequency");
    app->add_option("--lambda", config.lambda, "qubit-photon coupling");
    app->add_option("--unit", unit, "frequency unit convention: ghz_linear | angular");
    app->add_option("--cutoff", config.cutoff, "Fock cutoff N");
    app->add_option("--output", config.output, "output file (default stdout)");
    app->add_option("--format", format, "csv | json");
    app->add_option("--tol-oracle", config.tol_oracle, "cutoff-drift tolerance, exact amplitudes");
    app->add_option("--tol-convergence", config.tol_convergence, "convergence scan tolerance");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamical Lamb effect and quench-entanglement calculator"};
    app.require_subcommand(1);

    RunConfig config;
    std::string config_path, unit, format, sweep, shape;

    auto* reproduce = app.add_subcommand(
        "reproduce", "evaluate the showcase observables against their reference values");
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter and emit result rows");
    auto* oracle = app.add_subcommand(
        "oracle-compare", "closed-form amplitudes vs exact diagonalization, with lambda scaling");
    auto* evolve = app.add_subcommand("evolve", "finite-ramp tau scan of the time evolution");

    for (CLI::App* sub : {reproduce, sweep_cmd, oracle, evolve})
        add_common_flags(sub, config, config_path, unit, format);
    sweep_cmd->add_option("--sweep", sweep, "name=start:stop:steps over omega1|omega2|e0|lambda");
    evolve->add_option("--shape", shape, "ramp shape: sudden | linear | smoothstep");
    evolve->add_option("--tau-min", config.tau_min, "smallest tau, in units of 1/omega1");
    evolve->add_option("--tau-max", config.tau_max, "largest tau, in units of 1/omega1");
    evolve->add_option("--tau-steps", config.tau_steps, "logarithmic tau grid size");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig merged;
        if (!config_path.empty()) dle::cli::apply_config_file(merged, config_path);
        // Flags win over the file: copy back only the values the user passed.
        CLI::App* sub = app.get_subcommands().front();
        auto passed = [&](const char* flag) {
            return sub->count(flag) > 0;
        };
        if (passed("--omega1")) merged.omega1 = config.omega1;
        if (passed("--omega2")) merged.omega2 = config.omega2;
        if (passed("--e0")) merged.e0 = config.e0;
        if (passed("--lambda")) merged.lambda = config.lambda;
        if (passed("--cutoff")) merged.cutoff = config.cutoff;
        if (passed("--output")) merged.output = config.output;
        if (passed("--tol-oracle")) merged.tol_oracle = config.tol_oracle;
        if (passed("--tol-convergence")) merged.tol_convergence = config.tol_convergence;
        if (!unit.empty()) dle::cli::apply_key(merged, "unit", unit);
        if (!format.empty()) dle::cli::apply_key(merged, "format", format);
        if (!sweep.empty()) dle::cli::apply_key(merged, "sweep", sweep);
        if (!shape.empty()) dle::cli::apply_key(merged, "shape", shape);
        if (sub == evolve) {
            if (passed("--tau-min")) merged.tau_min = config.tau_min;
            if (passed("--tau-max")) merged.tau_max = config.tau_max;
            if (passed("--tau-steps")) merged.tau_steps = config.tau_steps;
        }

        Command command = Command::reproduce;
        if (sub == sweep_cmd) command = Command::sweep;
        else if (sub == oracle) command = Command::oracle_compare;
        else if (sub == evolve) command = Command::evolve_scan;

        return dle::cli::execute(command, merged, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return dle::cli::exit_code_for_current_exception();
    }
}
