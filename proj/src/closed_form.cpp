// SPDX-License-Identifier: Apache-2.0
#include "arlkit/closed_form.hpp"

#include "arlkit/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace arlkit {

namespace {

bool imag_is_zero(Complex rho) { return std::abs(rho.imag()) < kZeroImagThreshold; }

bool fully_correlated(Complex rho)
{
    return std::abs(std::abs(rho.real()) - 1.0) < kFullCorrelationThreshold;
}

} // namespace

std::string_view to_string(ArlCase c) noexcept
{
    switch (c) {
    case ArlCase::Quartic:
        return "quartic";
    case ArlCase::Quadratic:
        return "quadratic";
    case ArlCase::Uncorrelated:
        return "uncorrelated";
    }
    return "unknown";
}

ArlInputs quartic_coeffs(const ArrayGeometry& g, const SignalSummary& s, double sigma2)
{
    const double n = static_cast<double>(s.snapshots);
    const double snr1 = s.eps1 * s.eps1 / sigma2;
    const double snr2 = s.eps2 * s.eps2 / sigma2;
    const double root = std::sqrt(snr1 * snr2);
    const double rho_re = s.rho.real();
    const double rho_im = s.rho.imag();

    ArlInputs in;
    in.alpha = g.alpha();
    in.A = n * snr1 * in.alpha;
    in.B = n * snr2 * in.alpha;
    in.C = n * root * rho_re * in.alpha;
    in.D = n * root * rho_im * g.beta();
    in.gamma = (1.0 - rho_re * rho_re) * in.alpha * in.alpha;
    in.kappa = 2.0 * rho_im * rho_im * g.beta() * g.beta();
    in.phi = (1.0 / snr1 + 1.0 / snr2 + 2.0 * rho_re / root) / n;
    return in;
}

ArlInputs quartic_coeffs(const Scenario& sc)
{
    return quartic_coeffs(sc.geometry(), sc.signals(), sc.sigma2());
}

double even_quartic(const ArlInputs& in, double delta) noexcept
{
    const double d2 = delta * delta;
    return in.D * in.D * d2 * d2 + (in.C * in.C - in.A * in.B) * d2 + (in.A + in.B) / 2.0 + in.C;
}

double full_quartic(const ArlInputs& in, double delta) noexcept
{
    const double d2 = delta * delta;
    return even_quartic(in, delta) + 2.0 * in.C * in.D * d2 * delta + in.D * delta;
}

ArlResult closed_form_arl(const ArrayGeometry& g, const SignalSummary& s, double sigma2)
{
    const ArlInputs in = quartic_coeffs(g, s, sigma2);

    if (imag_is_zero(s.rho)) {
        if (fully_correlated(s.rho))
            throw NoClosedForm("no closed-form ARL for real rho = +-1");
        const bool uncorrelated = std::abs(s.rho.real()) < kZeroImagThreshold;
        if (uncorrelated) {
            const double n = static_cast<double>(s.snapshots);
            const double snr1 = s.eps1 * s.eps1 / sigma2;
            const double snr2 = s.eps2 * s.eps2 / sigma2;
            return {std::sqrt((1.0 / snr1 + 1.0 / snr2) / (2.0 * n * in.alpha)),
                    ArlCase::Uncorrelated, std::nullopt};
        }
        return {std::sqrt(in.phi * in.alpha / (2.0 * in.gamma)), ArlCase::Quadratic, std::nullopt};
    }

    const double x = in.alpha * in.kappa * in.phi / (in.gamma * in.gamma);
    if (!(x <= 1.0))
        throw DomainError("closed-form ARL undefined: alpha*kappa*phi/gamma^2 = " +
                          std::to_string(x) + " > 1");
    const double delta2 = in.alpha * in.phi / (in.gamma * (1.0 + std::sqrt(1.0 - x)));
    return {std::sqrt(delta2), ArlCase::Quartic, x};
}

ArlResult closed_form_arl(const Scenario& sc)
{
    return closed_form_arl(sc.geometry(), sc.signals(), sc.sigma2());
}

double rejected_root(const Scenario& sc)
{
    const ArlInputs in = quartic_coeffs(sc);
    if (!(in.kappa > 0.0))
        throw std::invalid_argument("rejected_root: only defined when rho_im != 0");
    const double x = in.alpha * in.kappa * in.phi / (in.gamma * in.gamma);
    if (!(x <= 1.0))
        throw DomainError("rejected_root: alpha*kappa*phi/gamma^2 > 1");
    return std::sqrt(in.gamma / in.kappa * (1.0 + std::sqrt(1.0 - x)));
}

double weak_signal_limit(const Scenario& sc)
{
    const Complex rho = sc.rho();
    if (fully_correlated(rho))
        throw NoClosedForm("weak-signal limit undefined for |rho_re| = 1");
    const ArlInputs in = quartic_coeffs(sc);
    const double n = static_cast<double>(sc.snapshots());
    return std::sqrt(in.alpha / (2.0 * in.gamma * n * sc.snr2()));
}

double doa_separation(double delta_nu, double wavenumber, double theta0)
{
    const double c = std::cos(theta0);
    if (!(wavenumber > 0.0) || !(std::abs(c) > 1e-12))
        throw std::invalid_argument("doa_separation: need k > 0 and cos(theta0) != 0");
    return delta_nu / (wavenumber * c);
}

} // namespace arlkit
