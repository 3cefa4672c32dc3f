// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "arlkit/signals.hpp"

namespace arlkit {

/// Fisher information for xi = [nu1, nu2, sigma2]; block diagonal, so the
/// angle block and the noise entry are stored separately.
struct FisherInformation {
    double nu1_nu1 = 0.0;
    double nu1_nu2 = 0.0;
    double nu2_nu2 = 0.0;
    double noise = 0.0; ///< MN / sigma^4

    /// Determinant of the 2x2 angle block.
    double angle_determinant() const noexcept { return nu1_nu1 * nu2_nu2 - nu1_nu2 * nu1_nu2; }
};

struct CrbReport {
    double crb_nu1 = 0.0;
    double crb_nu2 = 0.0;
    double crb_cross = 0.0;
    double crb_sigma2 = 0.0;
    double psi = 0.0;
    double delta_used = 0.0;
};

/// eta(Delta) = s1^H s2 sum_m d_m^2 exp(-j d_m Delta), no approximation.
Complex eta(const Scenario& sc, double delta);

/// First-order expansion s1^H s2 (alpha - j delta beta).
Complex eta_taylor(const Scenario& sc, double delta);

/// Determinant Psi of the angle block at spacing delta. Never throws.
double psi(const Scenario& sc, double delta);

/// FIM from the summary statistics (eps, rho) and the geometry.
FisherInformation fim(const Scenario& sc, double delta);

/// FIM assembled directly from the raw waveforms and steering derivatives,
/// 2 Re{ dmu^H R^-1 dmu }, for steering angles nu1, nu2. Cross-check only.
FisherInformation fim_from_waveforms(const Scenario& sc, double nu1, double nu2);

/// Closed-form inverse of the angle block. Throws SingularInformation if Psi <= 0.
CrbReport crb_entries(const Scenario& sc, double delta);

/// CRB(nu1) + CRB(nu2) - 2 CRB(nu1, nu2). Throws SingularInformation if Psi <= 0.
double crb_of_spacing(const Scenario& sc, double delta);

} // namespace arlkit
