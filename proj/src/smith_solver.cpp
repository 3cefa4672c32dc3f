// SPDX-License-Identifier: Apache-2.0
#include "arlkit/smith_solver.hpp"

#include "arlkit/closed_form.hpp"
#include "arlkit/crb.hpp"
#include "arlkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace arlkit {

namespace {

constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

double initial_seed(const Scenario& sc, const InitialGuess& guess)
{
    if (const auto* fixed = std::get_if<FixedSeed>(&guess)) {
        if (!(fixed->value > 0.0))
            throw std::invalid_argument("fixed solver seed must be positive");
        return fixed->value;
    }
    try {
        return closed_form_arl(sc).delta;
    } catch (const ArlError&) {
        return 1.0 / std::sqrt(sc.geometry().alpha());
    }
}

void check_config(const SolverConfig& cfg)
{
    if (!(cfg.abs_tol > 0.0))
        throw std::invalid_argument("solver abs_tol must be positive");
    if (!(cfg.rel_tol >= 0.0))
        throw std::invalid_argument("solver rel_tol must be non-negative");
    if (cfg.max_bracket_expansions < 0)
        throw std::invalid_argument("solver max_bracket_expansions must be non-negative");
}

} // namespace

double smith_residual(const Scenario& sc, double delta)
{
    if (!(psi(sc, delta) > 0.0))
        return kMinusInf;
    return delta * delta - crb_of_spacing(sc, delta);
}

double ambiguity_cap(const Scenario& sc)
{
    return std::numbers::pi / sc.geometry().aperture();
}

double search_bracket(const Scenario& sc, const SolverConfig& cfg)
{
    check_config(cfg);
    const double cap = ambiguity_cap(sc);
    double hi = std::min(2.0 * initial_seed(sc, cfg.initial_guess), cap);
    bool any_regular = false;

    for (int expansion = 0;; ++expansion) {
        const double g = smith_residual(sc, hi);
        any_regular = any_regular || g != kMinusInf;
        if (g > 0.0)
            return hi;
        if (hi >= cap || expansion >= cfg.max_bracket_expansions)
            break;
        hi = std::min(2.0 * hi, cap);
    }

    if (!any_regular && smith_residual(sc, kSearchFloor) == kMinusInf)
        throw SingularInformation("Fisher information singular over the whole search region");
    throw NoBracket("no sign change of delta^2 - CRB(delta) up to " + std::to_string(hi));
}

int count_sign_changes(const Scenario& sc, double lo, double hi, int points)
{
    if (points < 2 || !(hi > lo))
        throw std::invalid_argument("count_sign_changes: need points >= 2 and hi > lo");
    int changes = 0;
    bool prev_positive = smith_residual(sc, lo) > 0.0;
    for (int i = 1; i < points; ++i) {
        const double x = lo + (hi - lo) * i / (points - 1);
        const bool positive = smith_residual(sc, x) > 0.0;
        changes += positive != prev_positive ? 1 : 0;
        prev_positive = positive;
    }
    return changes;
}

double numeric_arl(const Scenario& sc, const SolverConfig& cfg)
{
    const double top = search_bracket(sc, cfg);

    // First sign change on a uniform scan, so the smallest root is taken.
    double lo = kSearchFloor;
    double hi = top;
    if (smith_residual(sc, lo) > 0.0)
        throw NoBracket("delta^2 - CRB(delta) already positive at the search floor");
    for (int i = 1; i < kScanPoints; ++i) {
        const double x = kSearchFloor + (top - kSearchFloor) * i / (kScanPoints - 1);
        if (smith_residual(sc, x) > 0.0) {
            hi = x;
            break;
        }
        lo = x;
    }

    while (hi - lo > cfg.abs_tol || hi - lo > cfg.rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (smith_residual(sc, mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace arlkit
