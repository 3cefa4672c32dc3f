// SPDX-License-Identifier: Apache-2.0
//
// arlkit: angular resolution limit of two closely spaced sources.
//
//   arlkit point    --geometry ula:M=6,d=0.5 --rho-re 0.5 --rho-im 0.5
//   arlkit sweep    --var sigma2 --start 0.01 --stop 1 --count 21 --log
//   arlkit validate --var sigma2 --values 0.01,0.1,1 --rho-re -0.5
//   arlkit fig 5 --out fig5.csv

#include "arlkit/experiments.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

using namespace arlkit;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

struct Options {
    ScenarioParams scenario;
    double rho_re = 0.0;
    double rho_im = 0.0;
    std::string out = "-";
    double tol = SolverConfig{}.abs_tol;
    bool numeric = false;
    bool closed = false;
    bool both = false;

    // sweep / validate
    std::string var = "sigma2";
    std::vector<double> values;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    bool log = false;
    double threshold = kDefaultGapThreshold;

    int figure = 0;

    OutputMode mode(OutputMode fallback) const
    {
        if (numeric)
            return OutputMode::Numeric;
        if (closed)
            return OutputMode::Closed;
        if (both)
            return OutputMode::Both;
        return fallback;
    }

    ScenarioParams params() const
    {
        ScenarioParams p = scenario;
        p.rho = {rho_re, rho_im};
        return p;
    }

    SolverConfig solver() const
    {
        SolverConfig cfg;
        cfg.abs_tol = tol;
        return cfg;
    }

    SweepSpec sweep_spec() const
    {
        SweepSpec spec;
        spec.variable = parse_sweep_variable(var);
        spec.fixed = params();
        spec.outputs = mode(OutputMode::Both);
        if (!values.empty()) {
            spec.grid = values;
        } else {
            if (count < 1)
                throw std::invalid_argument("give --values or --start/--stop/--count");
            spec.grid = make_grid(start, stop, count, log ? GridScale::Log : GridScale::Linear);
        }
        return spec;
    }
};

void add_scenario_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--geometry", o.scenario.geometry,
                    "ula:M=<int>,d=<real> or pattern:<marks>,d=<real> (lambda = 1)")
        ->capture_default_str();
    cmd->add_option("--snapshots", o.scenario.snapshots, "number of snapshots N")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--eps1", o.scenario.eps1, "rms amplitude of source 1")->capture_default_str();
    cmd->add_option("--eps2", o.scenario.eps2, "rms amplitude of source 2")->capture_default_str();
    cmd->add_option("--sigma2", o.scenario.sigma2, "noise variance")->capture_default_str();
    cmd->add_option("--rho-re", o.rho_re, "real part of the correlation factor")->capture_default_str();
    cmd->add_option("--rho-im", o.rho_im, "imaginary part of the correlation factor")
        ->capture_default_str();
    cmd->add_option("--out", o.out, "output path, '-' for stdout")->capture_default_str();
    cmd->add_option("--tol", o.tol, "absolute tolerance of the numeric solver")->capture_default_str();
    auto* numeric = cmd->add_flag("--numeric", o.numeric, "numeric Smith-criterion root only");
    auto* closed = cmd->add_flag("--closed", o.closed, "closed-form ARL only");
    auto* both = cmd->add_flag("--both", o.both, "closed form and numeric root");
    numeric->excludes(closed)->excludes(both);
    closed->excludes(both);
}

void add_grid_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--var", o.var, "swept variable: sigma2, rho_re, rho_im, eps1, eps2")
        ->capture_default_str();
    cmd->add_option("--values", o.values, "explicit grid")->delimiter(',');
    cmd->add_option("--start", o.start, "first grid value");
    cmd->add_option("--stop", o.stop, "last grid value");
    cmd->add_option("--count", o.count, "number of grid points");
    cmd->add_flag("--log", o.log, "logarithmic grid spacing");
}

// Owns the file when --out is a path.
class Output {
public:
    explicit Output(const std::string& path)
    {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw std::invalid_argument("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void print_warnings(const std::vector<std::string>& warnings)
{
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << '\n';
}

int run_point_cmd(const Options& o)
{
    const PointRecord rec = run_point(o.params(), o.mode(OutputMode::Both), o.solver());
    Output out(o.out);
    write_csv_header(out.stream());
    write_csv_row(out.stream(), "point", std::nullopt, rec);
    return 0;
}

int run_sweep_cmd(const Options& o)
{
    const SweepResult result = run_sweep(o.sweep_spec(), o.solver());
    print_warnings(result.warnings);
    Output out(o.out);
    write_csv(out.stream(), result);
    return 0;
}

int run_validate_cmd(const Options& o)
{
    const ValidationReport report = validate(o.sweep_spec(), o.threshold, o.solver());
    print_warnings(report.warnings);
    Output out(o.out);
    write_csv(out.stream(), report.sweep);
    std::cerr << "compared " << report.compared << " point(s), excluded " << report.excluded
              << ", max relative gap "
              << (report.max_gap ? std::to_string(*report.max_gap) : std::string("n/a"))
              << ", threshold " << o.threshold << ": " << (report.passed ? "PASS" : "FAIL") << '\n';
    return report.passed ? 0 : kExitValidation;
}

int run_fig_cmd(const Options& o)
{
    Output out(o.out);
    write_csv_header(out.stream());
    for (SweepSpec spec : figure_preset(o.figure)) {
        spec.outputs = o.mode(spec.outputs);
        const SweepResult result = run_sweep(spec, o.solver());
        print_warnings(result.warnings);
        out.stream() << "# series: " << spec.label << '\n';
        write_csv(out.stream(), result, false);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Angular resolution limit of two closely spaced sources on a linear array"};
    app.require_subcommand(1);

    Options o;
    auto* point = app.add_subcommand("point", "evaluate a single scenario");
    add_scenario_flags(point, o);

    auto* sweep = app.add_subcommand("sweep", "sweep one parameter and emit CSV");
    add_scenario_flags(sweep, o);
    add_grid_flags(sweep, o);

    auto* check = app.add_subcommand("validate", "compare closed form against the numeric root");
    add_scenario_flags(check, o);
    add_grid_flags(check, o);
    check->add_option("--threshold", o.threshold, "maximum allowed relative gap")
        ->capture_default_str();

    auto* fig = app.add_subcommand("fig", "emit the data series of a figure preset");
    fig->add_option("figure", o.figure, "figure number 1..5")->required()->check(CLI::Range(1, 5));
    fig->add_option("--out", o.out, "output path, '-' for stdout")->capture_default_str();
    fig->add_option("--tol", o.tol, "absolute tolerance of the numeric solver")->capture_default_str();
    auto* fig_numeric = fig->add_flag("--numeric", o.numeric, "numeric root only");
    auto* fig_closed = fig->add_flag("--closed", o.closed, "closed form only");
    auto* fig_both = fig->add_flag("--both", o.both, "both (default)");
    fig_numeric->excludes(fig_closed)->excludes(fig_both);
    fig_closed->excludes(fig_both);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*point)
            return run_point_cmd(o);
        if (*sweep)
            return run_sweep_cmd(o);
        if (*check)
            return run_validate_cmd(o);
        return run_fig_cmd(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
