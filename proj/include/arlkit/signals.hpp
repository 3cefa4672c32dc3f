// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "arlkit/geometry.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace arlkit {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// The only signal quantities the CRB and ARL depend on.
struct SignalSummary {
    std::size_t snapshots = 0;
    double eps1 = 0.0; ///< rms amplitude ||s1|| / sqrt(N)
    double eps2 = 0.0;
    Complex rho;       ///< s1^H s2 / (||s1|| ||s2||)

    /// s1^H s2 = N eps1 eps2 rho.
    Complex inner() const noexcept
    {
        return static_cast<double>(snapshots) * eps1 * eps2 * rho;
    }
};

/// Normalized inner product s1^H s2 / (||s1|| ||s2||). Throws on a zero vector
/// or a length mismatch.
Complex correlation(std::span<const Complex> s1, std::span<const Complex> s2);

/// Two deterministic source waveforms of equal length N with their summary.
class SourcePair {
public:
    /// Summary statistics are measured from the vectors.
    SourcePair(ComplexVector s1, ComplexVector s2);

    const ComplexVector& s1() const noexcept { return s1_; }
    const ComplexVector& s2() const noexcept { return s2_; }
    std::size_t snapshots() const noexcept { return s1_.size(); }

    const SignalSummary& summary() const noexcept { return summary_; }
    double eps1() const noexcept { return summary_.eps1; }
    double eps2() const noexcept { return summary_.eps2; }
    Complex correlation() const noexcept { return summary_.rho; }
    Complex inner() const noexcept { return summary_.inner(); }

private:
    SourcePair(ComplexVector s1, ComplexVector s2, SignalSummary prescribed);

    friend SourcePair make_pair(std::size_t, double, double, Complex,
                                std::optional<std::uint64_t>);

    ComplexVector s1_;
    ComplexVector s2_;
    SignalSummary summary_;
};

inline Complex correlation(const SourcePair& p) noexcept { return p.correlation(); }

/// Builds s1 = sqrt(N) eps1 e1 and s2 = sqrt(N) eps2 (rho e1 + sqrt(1-|rho|^2) e2)
/// for orthonormal e1, e2. Without a seed e1, e2 are the first two standard
/// basis vectors; with a seed they are two columns of a random unitary, which
/// changes the waveforms but not (eps1, eps2, rho).
///
/// The returned summary holds the prescribed values; the vectors reproduce
/// them to rounding.
SourcePair make_pair(std::size_t snapshots, double eps1, double eps2, Complex rho,
                     std::optional<std::uint64_t> rotation_seed = std::nullopt);

/// s_i(t) = a_i(t) exp(j(2 pi f0 + pi_i(t))). With `carrier_scales_with_time`
/// the carrier term becomes 2 pi f0 t, t = 1..N.
SourcePair synthesize_waveforms(std::span<const double> amplitudes1,
                                std::span<const double> amplitudes2,
                                std::span<const double> phases1,
                                std::span<const double> phases2, double f0,
                                bool carrier_scales_with_time = false);

/// Geometry, source pair and noise variance; the full CRB/ARL input.
class Scenario {
public:
    Scenario(ArrayGeometry geometry, SourcePair sources, double sigma2);

    const ArrayGeometry& geometry() const noexcept { return geometry_; }
    const SourcePair& sources() const noexcept { return sources_; }
    const SignalSummary& signals() const noexcept { return sources_.summary(); }
    double sigma2() const noexcept { return sigma2_; }

    std::size_t snapshots() const noexcept { return sources_.snapshots(); }
    double snr1() const noexcept { return signals().eps1 * signals().eps1 / sigma2_; }
    double snr2() const noexcept { return signals().eps2 * signals().eps2 / sigma2_; }
    Complex rho() const noexcept { return signals().rho; }

private:
    ArrayGeometry geometry_;
    SourcePair sources_;
    double sigma2_;
};

/// M x N matrix of array snapshots, column-major (one column per time sample).
class SnapshotMatrix {
public:
    SnapshotMatrix(std::size_t sensors, std::size_t snapshots)
        : sensors_(sensors), snapshots_(snapshots), data_(sensors * snapshots) {}

    std::size_t sensors() const noexcept { return sensors_; }
    std::size_t snapshots() const noexcept { return snapshots_; }
    Complex& operator()(std::size_t m, std::size_t t) { return data_[t * sensors_ + m]; }
    const Complex& operator()(std::size_t m, std::size_t t) const { return data_[t * sensors_ + m]; }
    std::span<const Complex> data() const noexcept { return data_; }

    bool operator==(const SnapshotMatrix&) const = default;

private:
    std::size_t sensors_;
    std::size_t snapshots_;
    ComplexVector data_;
};

/// x_m(t) = sum_i s_i(t) exp(j nu_i d_m) + n_m(t), with n circular complex
/// Gaussian of variance sigma2, deterministic in `noise_seed`.
SnapshotMatrix synthesize_snapshots(const Scenario& sc, double nu1, double nu2,
                                    std::uint64_t noise_seed);

/// Raw form: sigma2 may be 0 and either waveform may be all zeros.
SnapshotMatrix synthesize_snapshots(const ArrayGeometry& geometry,
                                    std::span<const Complex> s1,
                                    std::span<const Complex> s2, double nu1, double nu2,
                                    double sigma2, std::uint64_t noise_seed);

} // namespace arlkit
