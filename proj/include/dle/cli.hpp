#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dle/dynamics.hpp"
#include "dle/entanglement.hpp"

namespace dle::cli {

enum class Command { reproduce, sweep, oracle_compare, evolve_scan };

enum class UnitConvention {
    ghz_linear,  // inputs in linear GHz, multiplied by 2*pi internally
    angular,     // inputs already angular
};

enum class OutputFormat { csv, json };

struct SweepSpec {
    std::string name;  // omega1 | omega2 | e0 | lambda
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;
};

struct RunConfig {
    double omega1 = 5.0;
    double omega2 = 3.75;
    double e0 = 3.721;
    double lambda = 0.2;
    std::optional<UnitConvention> unit;  // must be declared, no silent default
    int cutoff = 20;
    std::optional<SweepSpec> sweep;
    std::string output;  // empty writes to stdout
    OutputFormat format = OutputFormat::csv;
    double tol_oracle = 1e-9;       // cutoff-drift tolerance for exact amplitudes
    double tol_convergence = 1e-10;
    RampShape shape = RampShape::smoothstep;
    double tau_min = 1e-3;  // in units of 1/omega1
    double tau_max = 1e3;
    int tau_steps = 7;

    double unit_scale() const;
    SystemParams params() const;
    QuenchSpec quench() const;
    void validate() const;
};

/// Merge `key = value` lines (with # comments) into the config. Flags
/// applied afterwards win.
void apply_config_file(RunConfig& config, const std::string& path);
void apply_key(RunConfig& config, const std::string& key, const std::string& value);
SweepSpec parse_sweep(const std::string& text);  // name=start:stop:steps

/// One emitted line of a sweep. Column order is fixed.
struct ResultRow {
    std::optional<double> swept;
    double w_10, w_01, w_11;
    double c_1, c_2;
    double a_1_10, a_0_11, a_2_11, a_2_00;
    bool validity_warning;
};

ResultRow evaluate_row(const SystemParams& params, const QuenchSpec& quench);
std::vector<ResultRow> run_sweep(const RunConfig& config);

std::string render_rows_csv(const std::vector<ResultRow>& rows);
std::string render_rows_json(const std::vector<ResultRow>& rows);

/// Fixed deterministic float rendering: scientific, 10 significant digits.
std::string format_number(double v);

struct ReproduceOutcome {
    std::string report;
    bool all_within = false;
};
ReproduceOutcome run_reproduce(const RunConfig& config);

std::string run_oracle_compare(const RunConfig& config);
std::string run_evolve_scan(const RunConfig& config);

/// Dispatch a command, writing artifacts to config.output (or `fallback`
/// when no path is set). Returns the process exit status.
int execute(Command command, const RunConfig& config, std::ostream& fallback);

/// Exit codes: 0 success, 2 config error, 3 numerical-validity error,
/// 4 convergence failure.
int exit_code_for_current_exception();

int worker_count();

}  // namespace dle::cli
