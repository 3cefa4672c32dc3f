// SPDX-License-Identifier: Apache-2.0
#include "arlkit/experiments.hpp"

#include "arlkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace arlkit {

namespace {

void append_status(std::string& status, std::string_view failure)
{
    if (status == "ok")
        status = failure;
    else
        status.append(";").append(failure);
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_optional(const std::optional<double>& v)
{
    return v ? format_number(*v) : std::string{};
}

std::string pattern_geometry(int type)
{
    return "pattern:" + std::string(table_pattern(type)) + ",d=0.5";
}

} // namespace

Scenario ScenarioParams::build() const
{
    ArrayGeometry g = ArrayGeometry::parse(geometry);
    return Scenario(std::move(g), make_pair(snapshots, eps1, eps2, rho), sigma2);
}

std::optional<double> PointRecord::rel_gap() const
{
    if (!delta_closed || !delta_numeric)
        return std::nullopt;
    return std::abs(*delta_closed - *delta_numeric) / *delta_numeric;
}

PointRecord run_point(const ScenarioParams& params, OutputMode outputs, const SolverConfig& cfg)
{
    const Scenario sc = params.build();
    PointRecord rec;
    rec.alpha = sc.geometry().alpha();
    rec.beta = sc.geometry().beta();

    if (outputs != OutputMode::Numeric) {
        try {
            const ArlResult r = closed_form_arl(sc);
            rec.delta_closed = r.delta;
            rec.case_tag = r.case_tag;
        } catch (const NoClosedForm&) {
            append_status(rec.status, "no-closed-form");
        } catch (const DomainError&) {
            append_status(rec.status, "domain-error");
        }
    }
    if (outputs != OutputMode::Closed) {
        try {
            rec.delta_numeric = numeric_arl(sc, cfg);
        } catch (const NoBracket&) {
            append_status(rec.status, "no-bracket");
        } catch (const SingularInformation&) {
            append_status(rec.status, "singular-information");
        }
    }

    const std::optional<double> at = rec.delta_numeric ? rec.delta_numeric : rec.delta_closed;
    rec.psi = psi(sc, at.value_or(0.0));
    if (at) {
        try {
            rec.crb = crb_entries(sc, *at);
        } catch (const SingularInformation&) {
        }
    }
    return rec;
}

std::string_view to_string(SweepVariable v) noexcept
{
    switch (v) {
    case SweepVariable::Sigma2:
        return "sigma2";
    case SweepVariable::RhoRe:
        return "rho_re";
    case SweepVariable::RhoIm:
        return "rho_im";
    case SweepVariable::Eps1:
        return "eps1";
    case SweepVariable::Eps2:
        return "eps2";
    }
    return "unknown";
}

SweepVariable parse_sweep_variable(std::string_view name)
{
    for (SweepVariable v : {SweepVariable::Sigma2, SweepVariable::RhoRe, SweepVariable::RhoIm,
                            SweepVariable::Eps1, SweepVariable::Eps2}) {
        if (to_string(v) == name)
            return v;
    }
    throw std::invalid_argument("unknown sweep variable '" + std::string(name) +
                                "' (expected sigma2, rho_re, rho_im, eps1 or eps2)");
}

std::vector<double> make_grid(double start, double stop, int count, GridScale scale)
{
    if (count < 1)
        throw std::invalid_argument("grid needs at least one point");
    if (scale == GridScale::Log && !(start > 0.0 && stop > 0.0))
        throw std::invalid_argument("log grid needs positive end points");
    if (count == 1)
        return {start};

    std::vector<double> grid(static_cast<std::size_t>(count));
    const double a = scale == GridScale::Log ? std::log10(start) : start;
    const double b = scale == GridScale::Log ? std::log10(stop) : stop;
    for (int i = 0; i < count; ++i) {
        const double u = a + (b - a) * i / (count - 1);
        grid[static_cast<std::size_t>(i)] = scale == GridScale::Log ? std::pow(10.0, u) : u;
    }
    // Pin the end points exactly.
    grid.front() = start;
    grid.back() = stop;
    return grid;
}

ScenarioParams with_value(ScenarioParams params, SweepVariable variable, double value)
{
    switch (variable) {
    case SweepVariable::Sigma2:
        params.sigma2 = value;
        break;
    case SweepVariable::RhoRe:
        params.rho.real(value);
        break;
    case SweepVariable::RhoIm:
        params.rho.imag(value);
        break;
    case SweepVariable::Eps1:
        params.eps1 = value;
        break;
    case SweepVariable::Eps2:
        params.eps2 = value;
        break;
    }
    return params;
}

SweepResult run_sweep(const SweepSpec& spec, const SolverConfig& cfg)
{
    if (spec.grid.empty())
        throw std::invalid_argument("sweep grid is empty");
    const bool increasing = spec.grid.size() < 2 || spec.grid[1] > spec.grid[0];
    for (std::size_t i = 1; i < spec.grid.size(); ++i) {
        const bool ok = increasing ? spec.grid[i] > spec.grid[i - 1] : spec.grid[i] < spec.grid[i - 1];
        if (!ok)
            throw std::invalid_argument("sweep grid must be strictly monotone");
    }

    SweepResult result;
    result.variable = spec.variable;
    std::size_t trimmed = 0;
    for (double value : spec.grid) {
        const ScenarioParams params = with_value(spec.fixed, spec.variable, value);
        if (std::norm(params.rho) > 1.0) {
            ++trimmed;
            continue;
        }
        result.rows.push_back({value, run_point(params, spec.outputs, cfg)});
    }
    if (trimmed > 0) {
        result.warnings.push_back("dropped " + std::to_string(trimmed) + " grid point(s) with |rho| > 1");
    }
    return result;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, std::string_view swept_var, std::optional<double> value,
                   const PointRecord& record)
{
    out << swept_var << ',' << format_optional(value) << ',' << format_optional(record.delta_closed)
        << ',' << format_optional(record.delta_numeric) << ',' << format_optional(record.rel_gap())
        << ',' << (record.case_tag ? to_string(*record.case_tag) : std::string_view{}) << ','
        << record.status << ',' << format_number(record.alpha) << ',' << format_number(record.beta)
        << ',' << format_number(record.psi) << '\n';
}

void write_csv(std::ostream& out, const SweepResult& result, bool header)
{
    if (header)
        write_csv_header(out);
    for (const SweepRow& row : result.rows)
        write_csv_row(out, to_string(result.variable), row.value, row.record);
}

ValidationReport validate(SweepSpec spec, double threshold, const SolverConfig& cfg)
{
    if (!(threshold > 0.0))
        throw std::invalid_argument("validation threshold must be positive");
    spec.outputs = OutputMode::Both;

    ValidationReport report;
    report.sweep = run_sweep(spec, cfg);
    report.warnings = report.sweep.warnings;
    for (const SweepRow& row : report.sweep.rows) {
        const auto gap = row.record.rel_gap();
        if (!gap) {
            ++report.excluded;
            report.warnings.push_back(std::string(to_string(spec.variable)) + "=" +
                                      format_number(row.value) + " excluded from gap statistic (" +
                                      row.record.status + ")");
            continue;
        }
        ++report.compared;
        report.max_gap = std::max(report.max_gap.value_or(0.0), *gap);
    }
    if (report.compared == 0)
        report.warnings.push_back("no grid point had both a closed-form and a numeric value");
    report.passed = !report.max_gap || *report.max_gap <= threshold;
    return report;
}

std::string_view table_pattern(int type)
{
    switch (type) {
    case 1:
        return ".xx.xx..";
    case 2:
        return "x....xxx";
    case 3:
        return "xxxxxxxx";
    default:
        throw std::invalid_argument("array type must be 1, 2 or 3");
    }
}

std::vector<SweepSpec> figure_preset(int figure)
{
    constexpr int kCurvePoints = 50;
    std::vector<SweepSpec> series;
    auto base = [] {
        SweepSpec s;
        s.fixed = ScenarioParams{};
        s.outputs = OutputMode::Both;
        return s;
    };

    switch (figure) {
    case 1:
        for (Complex rho : {Complex{0.5, 0.5}, Complex{-0.5, 0.0}}) {
            SweepSpec s = base();
            s.variable = SweepVariable::Sigma2;
            s.grid = make_grid(1e-2, 1.0, 21, GridScale::Log);
            s.fixed.rho = rho;
            s.label = rho.imag() != 0.0 ? "rho=0.5+0.5j" : "rho=-0.5";
            series.push_back(std::move(s));
        }
        break;
    case 2: {
        SweepSpec s = base();
        s.variable = SweepVariable::RhoIm;
        s.grid = make_grid(0.0, 0.86, kCurvePoints, GridScale::Linear);
        s.fixed.rho = {0.5, 0.0};
        s.label = "rho_re=0.5";
        series.push_back(std::move(s));
        break;
    }
    case 3:
        for (double rho_re : {0.0, 0.3, 0.6, 0.9}) {
            SweepSpec s = base();
            s.variable = SweepVariable::RhoIm;
            s.grid = make_grid(0.0, 0.99, kCurvePoints, GridScale::Linear);
            s.fixed.rho = {rho_re, 0.0};
            s.label = "rho_re=" + format_number(rho_re);
            series.push_back(std::move(s));
        }
        break;
    case 4:
        for (double rho_im : {0.0, 0.2, 0.4}) {
            SweepSpec s = base();
            s.variable = SweepVariable::RhoRe;
            s.grid = make_grid(-0.9, 0.9, kCurvePoints, GridScale::Linear);
            s.fixed.rho = {0.0, rho_im};
            s.label = "rho_im=" + format_number(rho_im);
            series.push_back(std::move(s));
        }
        break;
    case 5:
        for (int type = 1; type <= 3; ++type) {
            SweepSpec s = base();
            s.variable = SweepVariable::Eps1;
            s.grid = make_grid(1.0, 1000.0, kCurvePoints, GridScale::Log);
            s.fixed.geometry = pattern_geometry(type);
            s.fixed.rho = {0.5, 0.5};
            s.label = "type" + std::to_string(type) + " " + std::string(table_pattern(type));
            series.push_back(std::move(s));
        }
        break;
    default:
        throw std::invalid_argument("figure must be 1..5");
    }
    return series;
}

} // namespace arlkit
