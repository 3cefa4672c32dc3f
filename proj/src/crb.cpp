// SPDX-License-Identifier: Apache-2.0
#include "arlkit/crb.hpp"

#include "arlkit/errors.hpp"

#include <cmath>
#include <string>

namespace arlkit {

namespace {

double two_n_alpha(const Scenario& sc)
{
    return 2.0 * static_cast<double>(sc.snapshots()) * sc.geometry().alpha();
}

void require_positive_psi(double value, double delta)
{
    if (!(value > 0.0))
        throw SingularInformation("Fisher information is singular at Delta = " +
                                  std::to_string(delta) + " (Psi = " + std::to_string(value) + ")");
}

} // namespace

Complex eta(const Scenario& sc, double delta)
{
    Complex sum{};
    for (double d : sc.geometry().positions())
        sum += d * d * std::polar(1.0, -d * delta);
    return sc.signals().inner() * sum;
}

Complex eta_taylor(const Scenario& sc, double delta)
{
    const auto& g = sc.geometry();
    return sc.signals().inner() * Complex{g.alpha(), -delta * g.beta()};
}

double psi(const Scenario& sc, double delta)
{
    const double a = two_n_alpha(sc);
    const double re_eta = eta(sc, delta).real();
    const double s4 = sc.sigma2() * sc.sigma2();
    return a * a * sc.snr1() * sc.snr2() - 4.0 / s4 * re_eta * re_eta;
}

FisherInformation fim(const Scenario& sc, double delta)
{
    const double a = two_n_alpha(sc);
    const double m = static_cast<double>(sc.geometry().size());
    const double n = static_cast<double>(sc.snapshots());
    FisherInformation info;
    info.nu1_nu1 = a * sc.snr1();
    info.nu2_nu2 = a * sc.snr2();
    info.nu1_nu2 = 2.0 / sc.sigma2() * eta(sc, delta).real();
    info.noise = m * n / (sc.sigma2() * sc.sigma2());
    return info;
}

FisherInformation fim_from_waveforms(const Scenario& sc, double nu1, double nu2)
{
    const auto& g = sc.geometry();
    const auto& s1 = sc.sources().s1();
    const auto& s2 = sc.sources().s2();
    const ComplexVector a1 = g.steering_vector(nu1);
    const ComplexVector a2 = g.steering_vector(nu2);
    const auto pos = g.positions();

    // d mu / d nu_i at sensor m, time t is j d_m a_i[m] s_i(t).
    double i11 = 0.0;
    double i22 = 0.0;
    Complex i12{};
    for (std::size_t t = 0; t < s1.size(); ++t) {
        for (std::size_t m = 0; m < g.size(); ++m) {
            const Complex j_d{0.0, pos[m]};
            const Complex d1 = j_d * a1[m] * s1[t];
            const Complex d2 = j_d * a2[m] * s2[t];
            i11 += std::norm(d1);
            i22 += std::norm(d2);
            i12 += std::conj(d1) * d2;
        }
    }
    const double scale = 2.0 / sc.sigma2();
    const double m = static_cast<double>(g.size());
    const double n = static_cast<double>(s1.size());
    FisherInformation info;
    info.nu1_nu1 = scale * i11;
    info.nu2_nu2 = scale * i22;
    info.nu1_nu2 = scale * i12.real();
    info.noise = m * n / (sc.sigma2() * sc.sigma2());
    return info;
}

CrbReport crb_entries(const Scenario& sc, double delta)
{
    const double a = two_n_alpha(sc);
    const double re_eta = eta(sc, delta).real();
    const double s4 = sc.sigma2() * sc.sigma2();
    const double det = a * a * sc.snr1() * sc.snr2() - 4.0 / s4 * re_eta * re_eta;
    require_positive_psi(det, delta);

    CrbReport r;
    r.psi = det;
    r.delta_used = delta;
    r.crb_nu1 = a * sc.snr2() / det;
    r.crb_nu2 = a * sc.snr1() / det;
    r.crb_cross = -2.0 / (sc.sigma2() * det) * re_eta;
    r.crb_sigma2 = s4 / (static_cast<double>(sc.geometry().size()) *
                         static_cast<double>(sc.snapshots()));
    return r;
}

double crb_of_spacing(const Scenario& sc, double delta)
{
    const double n = static_cast<double>(sc.snapshots());
    const double alpha = sc.geometry().alpha();
    const double re_eta = eta(sc, delta).real();
    const double det = psi(sc, delta);
    require_positive_psi(det, delta);
    return 2.0 / det *
           (n * sc.snr2() * alpha + n * sc.snr1() * alpha + 2.0 / sc.sigma2() * re_eta);
}

} // namespace arlkit
