// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "arlkit/signals.hpp"

#include <variant>

namespace arlkit {

/// Seed the bracket from the closed-form ARL (falls back to alpha^-1/2 when
/// the closed form is unavailable).
struct ClosedFormSeed {};
/// Seed the bracket from a fixed positive value.
struct FixedSeed {
    double value = 1.0;
};
using InitialGuess = std::variant<ClosedFormSeed, FixedSeed>;

struct SolverConfig {
    double abs_tol = 1e-12;
    /// Bisection also stops no earlier than this relative bracket width, so
    /// small roots are resolved to the same number of digits as large ones.
    double rel_tol = 1e-14;
    int max_bracket_expansions = 60;
    InitialGuess initial_guess = ClosedFormSeed{};
};

/// Lower end of every search; g is negative there unless the FIM is singular.
inline constexpr double kSearchFloor = 1e-15;
/// Points of the uniform scan that locates the first sign change.
inline constexpr int kScanPoints = 1024;

/// g(delta) = delta^2 - CRB(delta) with exact eta. Where Psi <= 0 the CRB is
/// unbounded and g is returned as -infinity.
double smith_residual(const Scenario& sc, double delta);

/// Spatial-frequency ambiguity cap pi / max(d_m).
double ambiguity_cap(const Scenario& sc);

/// Upper end of the bracket that numeric_arl would search, after expansion.
/// Throws NoBracket / SingularInformation under the same conditions.
double search_bracket(const Scenario& sc, const SolverConfig& cfg = {});

/// Number of sign changes of g on `points` uniformly spaced samples of [lo, hi].
int count_sign_changes(const Scenario& sc, double lo, double hi, int points = kScanPoints);

/// Smallest positive root of delta^2 = CRB(delta), the Smith criterion, using
/// the exact eta. Bracket expansion, a uniform scan for the first sign change,
/// then bisection until the bracket is within both cfg.abs_tol and
/// cfg.rel_tol relative to the root.
///
/// Throws NoBracket if g never becomes positive below the ambiguity cap and
/// SingularInformation if Psi <= 0 everywhere that was probed.
double numeric_arl(const Scenario& sc, const SolverConfig& cfg = {});

} // namespace arlkit
