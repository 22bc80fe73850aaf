#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dle/cli.hpp"

using namespace dle;
using namespace dle::cli;

namespace {

RunConfig angular_default() {
    RunConfig config;
    config.unit = UnitConvention::angular;
    return config;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/dle_test_" + name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("unit convention must be declared") {
    RunConfig config;
    CHECK_THROWS_AS(config.params(), ConfigError);
    CHECK_THROWS_AS(run_reproduce(config), ConfigError);

    config.unit = UnitConvention::ghz_linear;
    CHECK(config.params().e0 == doctest::Approx(2.0 * 3.14159265358979 * 3.721).epsilon(1e-10));
    config.unit = UnitConvention::angular;
    CHECK(config.params().e0 == 3.721);
}

TEST_CASE("sweep specification parsing") {
    const SweepSpec spec = parse_sweep("omega2 = 3.0 : 4.5 : 16");
    CHECK(spec.name == "omega2");
    CHECK(spec.start == 3.0);
    CHECK(spec.stop == 4.5);
    CHECK(spec.steps == 16);
    CHECK_THROWS_AS(parse_sweep("omega2=3.0:4.5"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("omega2=3.0:4.5:2.5"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("omega2=x:4.5:3"), ConfigError);

    RunConfig config = angular_default();
    config.sweep = parse_sweep("nope=1:2:3");
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config.sweep = parse_sweep("lambda=0.1:0.2:1");
    CHECK_THROWS_AS(config.validate(), ConfigError);
}

TEST_CASE("config file merge with flag precedence") {
    const TempFile file("config",
                        "# comment line\n"
                        "omega2 = 4.0   # trailing comment\n"
                        "lambda = 0.05\n"
                        "unit = angular\n"
                        "\n"
                        "format = json\n");
    RunConfig config;
    apply_config_file(config, file.path);
    CHECK(config.omega2 == 4.0);
    CHECK(config.lambda == 0.05);
    CHECK(config.format == OutputFormat::json);
    REQUIRE(config.unit.has_value());

    // A flag applied after the file wins.
    apply_key(config, "lambda", "0.2");
    CHECK(config.lambda == 0.2);

    CHECK_THROWS_AS(apply_config_file(config, "/nonexistent/path"), ConfigError);
    const TempFile bad("bad_config", "omega2\n");
    CHECK_THROWS_AS(apply_config_file(config, bad.path), ConfigError);
    CHECK_THROWS_AS(apply_key(config, "bogus", "1"), ConfigError);
    CHECK_THROWS_AS(apply_key(config, "omega2", "fast"), ConfigError);
    CHECK_THROWS_AS(apply_key(config, "unit", "hz"), ConfigError);
}

TEST_CASE("number formatting is fixed-width scientific") {
    CHECK(format_number(1.0) == "1.000000000e+00");
    CHECK(format_number(-1.472e-5) == "-1.472000000e-05");
    CHECK(format_number(0.0) == "0.000000000e+00");
}

TEST_CASE("reproduce hits the reference values") {
    RunConfig config;
    config.unit = UnitConvention::ghz_linear;
    const ReproduceOutcome outcome = run_reproduce(config);
    CHECK(outcome.all_within);
    CHECK(outcome.report.find("DEVIATES") == std::string::npos);
    CHECK(outcome.report.find("w_11") != std::string::npos);

    // The same numbers without the 2*pi rescaling are identical: every
    // reported observable is dimensionless.
    RunConfig angular = angular_default();
    CHECK(run_reproduce(angular).report == outcome.report);

    std::ostringstream sink;
    CHECK(execute(Command::reproduce, config, sink) == 0);
    CHECK(sink.str() == outcome.report);
}

TEST_CASE("sweep is deterministic and unit invariant") {
    RunConfig config = angular_default();
    config.sweep = parse_sweep("omega2=3.0:3.6:10");

    const auto rows = run_sweep(config);
    REQUIRE(rows.size() == 10);
    CHECK(rows.front().swept == 3.0);
    CHECK(rows.back().swept == 3.6);

    const std::string first = render_rows_csv(run_sweep(config));
    const std::string second = render_rows_csv(run_sweep(config));
    CHECK(first == second);
    CHECK(first.substr(0, first.find('\n')) ==
          "swept_value,w_10,w_01,w_11,c_1,c_2,a_1_10,a_0_11,a_2_11,a_2_00,validity_warning");

    RunConfig rescaled = config;
    rescaled.unit = UnitConvention::ghz_linear;
    CHECK(render_rows_csv(run_sweep(rescaled)) == first);

    // JSON carries the same fields.
    const std::string json = render_rows_json(rows);
    for (const char* key : {"swept_value", "w_10", "a_2_00", "validity_warning"})
        CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("sweep rows flag invalid regions instead of clamping") {
    RunConfig config = angular_default();
    // Sweep omega2 close to E0: amplitudes blow up.
    config.sweep = parse_sweep("omega2=3.70:3.72:3");
    const auto rows = run_sweep(config);
    CHECK(rows.front().validity_warning);
}

TEST_CASE("near resonance inside a sweep surfaces as the right exit code") {
    RunConfig config = angular_default();
    config.omega2 = config.e0;  // exact resonance
    bool threw = false;
    try {
        run_reproduce(config);
    } catch (const NearResonanceError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("omega2") != std::string::npos);
        CHECK(exit_code_for_current_exception() == 3);
    }
    CHECK(threw);
}

TEST_CASE("exit code mapping") {
    const auto code_for = [](auto&& error) {
        try {
            throw error;
        } catch (...) {
            return exit_code_for_current_exception();
        }
    };
    CHECK(code_for(ConfigError("x")) == 2);
    CHECK(code_for(std::invalid_argument("x")) == 2);
    CHECK(code_for(NearResonanceError("x")) == 3);
    CHECK(code_for(CutoffLeakageError("x")) == 3);
    CHECK(code_for(NotConvergedError("x")) == 4);
    CHECK(code_for(AssignmentFailedError("x")) == 4);
    CHECK(code_for(StepSizeUnderflowError("x")) == 4);
    CHECK(code_for(std::runtime_error("x")) == 1);
}

TEST_CASE("output file emission") {
    RunConfig config = angular_default();
    config.sweep = parse_sweep("lambda=0.05:0.2:4");
    config.output = "/tmp/dle_test_sweep.csv";
    std::ostringstream sink;
    CHECK(execute(Command::sweep, config, sink) == 0);
    CHECK(sink.str().empty());
    std::ifstream in(config.output);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == render_rows_csv(run_sweep(config)));
    std::remove(config.output.c_str());
}

TEST_CASE("oracle-compare emits the error-ratio table") {
    RunConfig config = angular_default();
    config.omega1 = 5.0;
    config.omega2 = 4.4;
    config.e0 = 3.0;
    config.lambda = 0.01;
    const std::string table = run_oracle_compare(config);
    std::istringstream lines(table);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "amplitude,closed_form,exact,rel_error,rel_error_half_lambda,error_ratio");
    int count = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++count;
    CHECK(count == 5);
    CHECK(table.find("a_1_10") != std::string::npos);
}

TEST_CASE("evolve scan emits one row per tau") {
    RunConfig config = angular_default();
    config.omega1 = 5.0;
    config.omega2 = 4.4;
    config.e0 = 3.0;
    config.lambda = 0.01;
    config.cutoff = 10;
    config.tau_min = 1e-3;
    config.tau_max = 1.0;
    config.tau_steps = 2;
    config.shape = RampShape::linear;
    const std::string table = run_evolve_scan(config);
    std::istringstream lines(table);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "tau,p_1_10,p_1_01,p_0_11,p_2_11,p_2_00,total_excitation,c_1,c_2");
    int count = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++count;
    CHECK(count == 2);
}

TEST_CASE("config validation catches bad values") {
    RunConfig config = angular_default();
    config.cutoff = 1;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config = angular_default();
    config.lambda = -0.1;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config = angular_default();
    config.tau_min = 0.0;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config = angular_default();
    config.tau_max = config.tau_min / 2.0;
    CHECK_THROWS_AS(config.validate(), ConfigError);
}
