// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace arlkit {

/// Sensor positions on a line, re-referenced so the leftmost sensor sits at 0.
///
/// Positions are in caller-chosen length units and the electrical angle
/// nu = k sin(theta) is in radians per that unit. The default wavenumber
/// corresponds to lambda = 1, so half-wavelength spacing is d = 0.5.
///
/// alpha = sum d_m^2 and beta = sum d_m^3 are not translation invariant; they
/// are always computed against the d_1 = 0 reference.
class ArrayGeometry {
public:
    static constexpr double kDefaultWavenumber = 2.0 * std::numbers::pi;

    /// Arbitrary positions; sorted order is required, the first one becomes 0.
    static ArrayGeometry from_positions(std::vector<double> positions,
                                        double wavenumber = kDefaultWavenumber);

    /// Uniform linear array {0, d, ..., (M-1)d}.
    static ArrayGeometry ula(int sensors, double spacing,
                             double wavenumber = kDefaultWavenumber);

    /// Slot pattern on a grid of pitch `spacing`. 'x' and U+2022 mark a
    /// sensor, '.' and U+25E6 an empty slot, whitespace is ignored.
    static ArrayGeometry from_pattern(std::string_view pattern, double spacing,
                                      double wavenumber = kDefaultWavenumber);

    /// "ula:M=<int>,d=<real>" or "pattern:<marks>,d=<real>".
    static ArrayGeometry parse(std::string_view spec,
                               double wavenumber = kDefaultWavenumber);

    std::span<const double> positions() const noexcept { return positions_; }
    std::size_t size() const noexcept { return positions_.size(); }
    double wavenumber() const noexcept { return wavenumber_; }
    double aperture() const noexcept { return positions_.back(); }

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }

    /// a(nu) with entries exp(j nu d_m).
    std::vector<std::complex<double>> steering_vector(double nu) const;

private:
    ArrayGeometry(std::vector<double> positions, double wavenumber);

    std::vector<double> positions_;
    double wavenumber_;
    double alpha_;
    double beta_;
};

/// Sum of squared positions.
double alpha(const ArrayGeometry& g) noexcept;
/// Sum of cubed positions.
double beta(const ArrayGeometry& g) noexcept;

} // namespace arlkit
