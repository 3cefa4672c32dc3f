// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "arlkit/signals.hpp"

#include <optional>
#include <string_view>

namespace arlkit {

/// Coefficients of the Smith equation after the first-order expansion of eta:
///   D^2 d^4 + 2CD d^3 + (C^2 - AB) d^2 + D d + (A+B)/2 + C = 0
/// together with the reduced quantities used by the closed form.
struct ArlInputs {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
    double gamma = 0.0; ///< (1 - rho_re^2) alpha^2
    double kappa = 0.0; ///< 2 rho_im^2 beta^2
    double phi = 0.0;   ///< (1/N)(1/SNR1 + 1/SNR2 + 2 rho_re / sqrt(SNR1 SNR2))
    double alpha = 0.0;
};

enum class ArlCase { Quartic, Quadratic, Uncorrelated };

std::string_view to_string(ArlCase c) noexcept;

struct ArlResult {
    double delta = 0.0; ///< nu-domain separation, radians per length unit
    ArlCase case_tag = ArlCase::Quadratic;
    /// alpha kappa phi / gamma^2 for the quartic case; the closed form relies on it being small.
    std::optional<double> approx_error_hint;

    bool operator==(const ArlResult&) const = default;
};

/// |rho_im| below this takes the rho_im = 0 branches.
inline constexpr double kZeroImagThreshold = 1e-12;
/// ||rho_re| - 1| below this is treated as fully correlated.
inline constexpr double kFullCorrelationThreshold = 1e-12;

ArlInputs quartic_coeffs(const Scenario& sc);
ArlInputs quartic_coeffs(const ArrayGeometry& g, const SignalSummary& s, double sigma2);

/// Quartic with the odd-degree terms removed, D^2 d^4 + (C^2-AB) d^2 + (A+B)/2 + C.
double even_quartic(const ArlInputs& in, double delta) noexcept;

/// Full quartic, odd-degree terms included.
double full_quartic(const ArlInputs& in, double delta) noexcept;

/// Closed-form angular resolution limit.
///
/// rho_im != 0: delta^2 = alpha phi / (gamma (1 + sqrt(1 - alpha kappa phi / gamma^2))),
/// the cancellation-free form of (gamma/kappa)(1 - sqrt(1 - alpha kappa phi/gamma^2)).
/// rho_im == 0, |rho_re| != 1: delta^2 = phi alpha / (2 gamma).
///
/// Throws NoClosedForm for rho_im == 0, rho_re == +-1 and DomainError when
/// alpha kappa phi / gamma^2 > 1.
ArlResult closed_form_arl(const Scenario& sc);
ArlResult closed_form_arl(const ArrayGeometry& g, const SignalSummary& s, double sigma2);

/// The larger root in delta^2 of the even quartic, discarded by closed_form_arl.
/// Only defined for the quartic case (kappa > 0); throws otherwise.
double rejected_root(const Scenario& sc);

/// Limit of the quadratic-case delta as SNR1 -> infinity at fixed SNR2:
/// sqrt(alpha / (2 gamma N SNR2)).
double weak_signal_limit(const Scenario& sc);

/// Converts a nu-domain separation to a DOA separation around theta0 (radians),
/// d_theta ~= d_nu / (k cos theta0).
double doa_separation(double delta_nu, double wavenumber, double theta0);

} // namespace arlkit
