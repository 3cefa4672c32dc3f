// SPDX-License-Identifier: Apache-2.0
#include "arlkit/closed_form.hpp"
#include "arlkit/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace arlkit;

namespace {

Scenario ula_scenario(double spacing, double e1, double e2, Complex rho, double sigma2,
                      std::optional<std::uint64_t> seed = std::nullopt)
{
    return Scenario(ArrayGeometry::ula(6, spacing), make_pair(100, e1, e2, rho, seed), sigma2);
}

} // namespace

TEST_CASE("quartic coefficients")
{
    SUBCASE("uncorrelated")
    {
        const auto in = quartic_coeffs(ula_scenario(1.0, 1.0, 2.0, {}, 0.5));
        CHECK(in.C == 0.0);
        CHECK(in.D == 0.0);
        CHECK(in.phi == doctest::Approx((1.0 / 2.0 + 1.0 / 8.0) / 100.0).epsilon(1e-15));
    }
    SUBCASE("hand-evaluated, alpha = 55, beta = 225")
    {
        const auto in = quartic_coeffs(ula_scenario(1.0, 1.0, 1.0, {0.5, 0.5}, 1.0));
        CHECK(in.A == doctest::Approx(5500.0).epsilon(1e-15));
        CHECK(in.B == doctest::Approx(5500.0).epsilon(1e-15));
        CHECK(in.C == doctest::Approx(2750.0).epsilon(1e-15));
        CHECK(in.D == doctest::Approx(11250.0).epsilon(1e-15));
        CHECK(in.phi == doctest::Approx(0.03).epsilon(1e-15));
        CHECK(in.gamma == doctest::Approx(2268.75).epsilon(1e-15));
        CHECK(in.kappa == doctest::Approx(25312.5).epsilon(1e-15));
        // C^2 <= AB
        CHECK(in.C * in.C <= in.A * in.B);
    }
    SUBCASE("anti-correlated equal strengths")
    {
        const auto in = quartic_coeffs(ula_scenario(0.5, 1.0, 1.0, {-1.0, 0.0}, 1.0));
        CHECK(std::abs(in.phi) < 1e-17);
    }
}

TEST_CASE("closed-form spot values, ULA(6,1), N=100, SNR=1")
{
    const auto uncorr = closed_form_arl(ula_scenario(1.0, 1.0, 1.0, {}, 1.0));
    CHECK(uncorr.case_tag == ArlCase::Uncorrelated);
    CHECK(uncorr.delta == doctest::Approx(std::sqrt(1.0 / 5500.0)).epsilon(1e-14));
    CHECK(std::abs(uncorr.delta - 1.3484e-2) < 1e-5);
    CHECK(!uncorr.approx_error_hint);

    const auto neg = closed_form_arl(ula_scenario(1.0, 1.0, 1.0, {-0.5, 0.0}, 1.0));
    CHECK(neg.case_tag == ArlCase::Quadratic);
    CHECK(neg.delta == doctest::Approx(std::sqrt(0.55 / 4537.5)).epsilon(1e-14));
    CHECK(std::abs(neg.delta - 1.1010e-2) < 1e-5);

    const auto quartic = closed_form_arl(ula_scenario(1.0, 1.0, 1.0, {0.5, 0.5}, 1.0));
    CHECK(quartic.case_tag == ArlCase::Quartic);
    CHECK(std::abs(quartic.delta - 1.9088e-2) < 1e-5);
    REQUIRE(quartic.approx_error_hint);
    // 55 * 25312.5 * 0.03 / 2268.75^2
    CHECK(*quartic.approx_error_hint == doctest::Approx(41765.625 / 5147226.5625).epsilon(1e-13));

    // The quadratic formula at rho_re = 0.5 lands about 0.1 % lower (1.017e-3).
    const double quadratic = std::sqrt(0.03 * 55.0 / (2.0 * 2268.75));
    CHECK(std::abs(quadratic - 1.9069e-2) < 1e-5);
    CHECK(quadratic < quartic.delta);
    CHECK(std::abs(quartic.delta - quadratic) / quartic.delta < 1.1e-3);
}

TEST_CASE("quartic case agrees with the printed root forms")
{
    for (Complex rho : {Complex{0.5, 0.5}, Complex{-0.3, 0.8}, Complex{0.1, -0.2}, Complex{0.0, 0.9}}) {
        const auto sc = ula_scenario(0.5, 1.2, 0.7, rho, 0.3);
        const auto in = quartic_coeffs(sc);
        const double x = in.alpha * in.kappa * in.phi / (in.gamma * in.gamma);
        const double printed = std::sqrt(in.gamma / in.kappa * (1.0 - std::sqrt(1.0 - x)));
        const double ab_form = std::sqrt(
            (in.A * in.B - in.C * in.C -
             std::sqrt(std::pow(in.C * in.C - in.A * in.B, 2) -
                       4.0 * in.D * in.D * ((in.A + in.B) / 2.0 + in.C))) /
            (2.0 * in.D * in.D));
        const auto r = closed_form_arl(sc);
        CAPTURE(rho);
        CHECK(r.case_tag == ArlCase::Quartic);
        CHECK(r.delta == doctest::Approx(printed).epsilon(1e-9));
        CHECK(r.delta == doctest::Approx(ab_form).epsilon(1e-9));

        // Root of the even quartic, relative to its constant term.
        const double scale = (in.A + in.B) / 2.0 + in.C;
        CHECK(std::abs(even_quartic(in, r.delta)) <= 1e-9 * scale);
        CHECK(std::abs(even_quartic(in, -r.delta)) <= 1e-9 * scale);

        const double other = rejected_root(sc);
        CHECK(other > r.delta);
        CHECK(std::abs(even_quartic(in, other)) <= 1e-9 * std::abs(in.D * in.D * std::pow(other, 4)));
    }
    CHECK_THROWS_AS(rejected_root(ula_scenario(0.5, 1.0, 1.0, {0.4, 0.0}, 1.0)), std::invalid_argument);
}

TEST_CASE("full quartic has the odd-degree terms the closed form drops")
{
    const auto in = quartic_coeffs(ula_scenario(0.5, 1.0, 1.0, {0.5, 0.5}, 1.0));
    const double d = 0.03;
    CHECK(full_quartic(in, d) - even_quartic(in, d) ==
          doctest::Approx(2.0 * in.C * in.D * d * d * d + in.D * d).epsilon(1e-12));
    const auto real_rho = quartic_coeffs(ula_scenario(0.5, 1.0, 1.0, {0.5, 0.0}, 1.0));
    CHECK(full_quartic(real_rho, d) == even_quartic(real_rho, d));
}

TEST_CASE("fully correlated real rho has no closed form")
{
    CHECK_THROWS_AS(closed_form_arl(ula_scenario(1.0, 1.0, 1.0, {1.0, 0.0}, 1.0)), NoClosedForm);
    CHECK_THROWS_AS(closed_form_arl(ula_scenario(1.0, 1.0, 2.0, {-1.0, 0.0}, 1.0)), NoClosedForm);
    CHECK_THROWS_AS(weak_signal_limit(ula_scenario(1.0, 1.0, 1.0, {1.0, 0.0}, 1.0)), NoClosedForm);
}

TEST_CASE("large alpha*kappa*phi/gamma^2 is a domain error")
{
    const auto sc = ula_scenario(0.5, 1.0, 1.0, {0.999, 0.04}, 1.0);
    const auto in = quartic_coeffs(sc);
    REQUIRE(in.alpha * in.kappa * in.phi / (in.gamma * in.gamma) > 1.0);
    CHECK_THROWS_AS(closed_form_arl(sc), DomainError);
}

TEST_CASE("quartic case tends to the quadratic case as rho_im -> 0")
{
    for (double rho_re : {-0.6, 0.0, 0.5}) {
        const double quad = closed_form_arl(ula_scenario(0.5, 1.0, 1.0, {rho_re, 0.0}, 1.0)).delta;
        const auto tiny = closed_form_arl(ula_scenario(0.5, 1.0, 1.0, {rho_re, 1e-6}, 1.0));
        CHECK(tiny.case_tag == ArlCase::Quartic);
        CHECK(std::abs(tiny.delta - quad) / quad < 1e-6);
    }
    // Below the zero threshold the quadratic branch is taken.
    CHECK(closed_form_arl(ula_scenario(0.5, 1.0, 1.0, {0.5, 1e-13}, 1.0)).case_tag ==
          ArlCase::Quadratic);
}

TEST_CASE("only the summary statistics matter")
{
    const Complex rho{0.3, -0.45};
    const auto reference = closed_form_arl(ula_scenario(0.5, 1.4, 0.6, rho, 0.2));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto r = closed_form_arl(ula_scenario(0.5, 1.4, 0.6, rho, 0.2, seed));
        CHECK(r == reference);
    }
}

TEST_CASE("delta increases with the noise variance")
{
    for (Complex rho : {Complex{}, Complex{-0.5, 0.0}, Complex{0.5, 0.5}, Complex{0.7, -0.2}}) {
        double prev = 0.0;
        for (double s2 = 1e-3; s2 <= 10.0 + 1e-9; s2 *= 1.5) {
            const double d = closed_form_arl(ula_scenario(0.5, 1.0, 1.0, rho, s2)).delta;
            CHECK(d > prev);
            prev = d;
        }
    }
}

TEST_CASE("delta increases with rho_re at rho_im = 0")
{
    double prev = 0.0;
    for (int i = 0; i <= 36; ++i) {
        const double rho_re = -0.9 + 0.05 * i;
        const double d = closed_form_arl(ula_scenario(0.5, 1.0, 1.0, {rho_re, 0.0}, 1.0)).delta;
        CHECK(d > prev);
        prev = d;
    }
}

TEST_CASE("rho_im has a small effect at rho_re = 0.5")
{
    const double base = closed_form_arl(ula_scenario(0.5, 1.0, 1.0, {0.5, 0.0}, 1.0)).delta;
    double worst = 0.0;
    for (int i = 0; i <= 86; ++i) {
        const double d = closed_form_arl(ula_scenario(0.5, 1.0, 1.0, {0.5, 0.01 * i}, 1.0)).delta;
        CHECK(d >= base * (1.0 - 1e-12));
        worst = std::max(worst, (d - base) / base);
    }
    CHECK(worst <= 0.05);
}

TEST_CASE("weak-signal limit")
{
    const auto sc = ula_scenario(1.0, 1.0, 1.0, {0.5, 0.0}, 1.0);
    const double limit = weak_signal_limit(sc);
    CHECK(limit == doctest::Approx(std::sqrt(55.0 / (2.0 * 2268.75 * 100.0))).epsilon(1e-14));
    CHECK(std::abs(limit - 1.1010e-2) < 1e-5);

    const double strong = closed_form_arl(ula_scenario(1.0, 1000.0, 1.0, {0.5, 0.0}, 1.0)).delta;
    CHECK(std::abs(strong - limit) / limit < 0.01);

    for (double e1 : {0.1, 1.0, 30.0, 1e4})
        CHECK(weak_signal_limit(ula_scenario(1.0, e1, 1.0, {0.5, 0.0}, 1.0)) == limit);
}

TEST_CASE("DOA separation")
{
    const double k = 2.0 * std::numbers::pi;
    CHECK(doa_separation(0.02, k, 0.0) == doctest::Approx(0.02 / k));
    CHECK(doa_separation(0.02, k, std::numbers::pi / 3) == doctest::Approx(0.04 / k));
    CHECK_THROWS_AS(doa_separation(0.02, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(doa_separation(0.02, k, std::numbers::pi / 2), std::invalid_argument);
    CHECK(to_string(ArlCase::Quartic) == "quartic");
}
