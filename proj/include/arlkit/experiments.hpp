// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "arlkit/closed_form.hpp"
#include "arlkit/crb.hpp"
#include "arlkit/smith_solver.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arlkit {

/// Scenario as given on the command line. Defaults are the simulation setup:
/// ULA of 6 sensors at half-wavelength spacing (lambda = 1), N = 100,
/// eps1 = eps2 = 1, sigma2 = 1, rho = 0.
struct ScenarioParams {
    std::string geometry = "ula:M=6,d=0.5";
    std::size_t snapshots = 100;
    double eps1 = 1.0;
    double eps2 = 1.0;
    double sigma2 = 1.0;
    Complex rho{};

    /// Throws std::invalid_argument for malformed geometry, |rho| > 1, etc.
    Scenario build() const;
};

enum class OutputMode { Closed, Numeric, Both };

struct PointRecord {
    std::optional<double> delta_closed;
    std::optional<double> delta_numeric;
    std::optional<ArlCase> case_tag;
    std::string status = "ok";
    std::optional<CrbReport> crb; ///< at the numeric delta if present, else the closed one
    double alpha = 0.0;
    double beta = 0.0;
    double psi = 0.0;

    /// |closed - numeric| / numeric when both are present.
    std::optional<double> rel_gap() const;
};

/// Evaluates one scenario. ARL failures (no closed form, domain error, no
/// bracket, singular FIM) go to `status`; only bad parameters throw.
PointRecord run_point(const ScenarioParams& params, OutputMode outputs,
                      const SolverConfig& cfg = {});

enum class SweepVariable { Sigma2, RhoRe, RhoIm, Eps1, Eps2 };

std::string_view to_string(SweepVariable v) noexcept;
SweepVariable parse_sweep_variable(std::string_view name);

enum class GridScale { Linear, Log };

/// `count` points from start to stop inclusive, evenly spaced in value or in log10.
std::vector<double> make_grid(double start, double stop, int count, GridScale scale);

struct SweepSpec {
    SweepVariable variable = SweepVariable::Sigma2;
    std::vector<double> grid;
    ScenarioParams fixed;
    OutputMode outputs = OutputMode::Both;
    std::string label; ///< series description, used by figure presets
};

struct SweepRow {
    double value = 0.0;
    PointRecord record;
};

struct SweepResult {
    SweepVariable variable = SweepVariable::Sigma2;
    std::vector<SweepRow> rows;
    std::vector<std::string> warnings;
};

/// Applies `value` of `variable` on top of the fixed parameters.
ScenarioParams with_value(ScenarioParams params, SweepVariable variable, double value);

/// One row per grid point in grid order. Grid points that would give |rho| > 1
/// are dropped with a warning; an empty or non-monotone grid throws.
SweepResult run_sweep(const SweepSpec& spec, const SolverConfig& cfg = {});

inline constexpr std::string_view kCsvHeader =
    "swept_var,value,delta_closed,delta_numeric,rel_gap,case_tag,status,alpha,beta,psi";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, std::string_view swept_var, std::optional<double> value,
                   const PointRecord& record);
void write_csv(std::ostream& out, const SweepResult& result, bool header = true);

struct ValidationReport {
    SweepResult sweep;
    std::optional<double> max_gap;
    std::size_t compared = 0;
    std::size_t excluded = 0;
    bool passed = true;
    std::vector<std::string> warnings;
};

inline constexpr double kDefaultGapThreshold = 1e-2;

/// Runs the sweep with both outputs and compares closed form against the
/// numeric root. Rows without a closed form are excluded with a warning.
ValidationReport validate(SweepSpec spec, double threshold = kDefaultGapThreshold,
                          const SolverConfig& cfg = {});

/// Series behind figure 1..5. Throws std::invalid_argument for other numbers.
std::vector<SweepSpec> figure_preset(int figure);

/// Table 1 array types 1..3 as slot patterns (half-wavelength grid).
std::string_view table_pattern(int type);

} // namespace arlkit
