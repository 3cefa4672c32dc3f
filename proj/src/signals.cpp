// SPDX-License-Identifier: Apache-2.0
#include "arlkit/signals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <tuple>

namespace arlkit {

namespace {

double norm2(std::span<const Complex> v)
{
    double acc = 0.0;
    for (const Complex& z : v)
        acc += std::norm(z);
    return std::sqrt(acc);
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b)
{
    Complex acc{};
    for (std::size_t t = 0; t < a.size(); ++t)
        acc += std::conj(a[t]) * b[t];
    return acc;
}

SignalSummary measure(const ComplexVector& s1, const ComplexVector& s2)
{
    if (s1.empty() || s1.size() != s2.size())
        throw std::invalid_argument("source waveforms must be non-empty and of equal length");
    const double n1 = norm2(s1);
    const double n2 = norm2(s2);
    if (n1 == 0.0 || n2 == 0.0)
        throw std::invalid_argument("source waveform has zero norm");
    const double root_n = std::sqrt(static_cast<double>(s1.size()));
    return {s1.size(), n1 / root_n, n2 / root_n, inner_product(s1, s2) / (n1 * n2)};
}

// Two orthonormal vectors in C^N: the first two columns of a Haar unitary.
std::pair<ComplexVector, ComplexVector> random_orthonormal_pair(std::size_t n, std::uint64_t seed)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      0x5eedu};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    auto draw = [&] {
        ComplexVector v(n);
        for (Complex& z : v)
            z = {normal(rng), normal(rng)};
        return v;
    };

    ComplexVector e1 = draw();
    const double n1 = norm2(e1);
    for (Complex& z : e1)
        z /= n1;

    ComplexVector e2 = draw();
    // Two Gram-Schmidt passes keep e1^H e2 at rounding level.
    for (int pass = 0; pass < 2; ++pass) {
        const Complex proj = inner_product(e1, e2);
        for (std::size_t t = 0; t < n; ++t)
            e2[t] -= proj * e1[t];
    }
    const double n2 = norm2(e2);
    for (Complex& z : e2)
        z /= n2;
    return {std::move(e1), std::move(e2)};
}

} // namespace

Complex correlation(std::span<const Complex> s1, std::span<const Complex> s2)
{
    if (s1.size() != s2.size())
        throw std::invalid_argument("correlation: length mismatch");
    const double n1 = norm2(s1);
    const double n2 = norm2(s2);
    if (n1 == 0.0 || n2 == 0.0)
        throw std::invalid_argument("correlation: zero-norm vector");
    return inner_product(s1, s2) / (n1 * n2);
}

SourcePair::SourcePair(ComplexVector s1, ComplexVector s2)
    : s1_(std::move(s1)), s2_(std::move(s2)), summary_(measure(s1_, s2_))
{
}

SourcePair::SourcePair(ComplexVector s1, ComplexVector s2, SignalSummary prescribed)
    : s1_(std::move(s1)), s2_(std::move(s2)), summary_(prescribed)
{
}

SourcePair make_pair(std::size_t snapshots, double eps1, double eps2, Complex rho,
                     std::optional<std::uint64_t> rotation_seed)
{
    if (!(eps1 > 0.0) || !(eps2 > 0.0) || !std::isfinite(eps1) || !std::isfinite(eps2))
        throw std::invalid_argument("make_pair: signal strengths must be positive");
    const double mag2 = std::norm(rho);
    if (!(mag2 <= 1.0))
        throw std::invalid_argument("make_pair: |rho| must not exceed 1");
    if (snapshots < 1 || (snapshots < 2 && mag2 < 1.0))
        throw std::invalid_argument("make_pair: need N >= 2 for |rho| < 1");

    ComplexVector e1;
    ComplexVector e2;
    if (rotation_seed && snapshots >= 2) {
        std::tie(e1, e2) = random_orthonormal_pair(snapshots, *rotation_seed);
    } else {
        e1.assign(snapshots, Complex{});
        e2.assign(snapshots, Complex{});
        e1[0] = 1.0;
        if (snapshots >= 2)
            e2[1] = 1.0;
    }

    const double root_n = std::sqrt(static_cast<double>(snapshots));
    const double ortho = std::sqrt(std::max(0.0, 1.0 - mag2));
    ComplexVector s1(snapshots);
    ComplexVector s2(snapshots);
    for (std::size_t t = 0; t < snapshots; ++t) {
        s1[t] = root_n * eps1 * e1[t];
        s2[t] = root_n * eps2 * (rho * e1[t] + ortho * e2[t]);
    }
    return SourcePair(std::move(s1), std::move(s2), SignalSummary{snapshots, eps1, eps2, rho});
}

SourcePair synthesize_waveforms(std::span<const double> amplitudes1,
                                std::span<const double> amplitudes2,
                                std::span<const double> phases1,
                                std::span<const double> phases2, double f0,
                                bool carrier_scales_with_time)
{
    const std::size_t n = amplitudes1.size();
    if (n == 0 || amplitudes2.size() != n || phases1.size() != n || phases2.size() != n)
        throw std::invalid_argument("synthesize_waveforms: sequences must share a length N >= 1");

    ComplexVector s1(n);
    ComplexVector s2(n);
    for (std::size_t t = 0; t < n; ++t) {
        if (!(amplitudes1[t] > 0.0) || !(amplitudes2[t] > 0.0))
            throw std::invalid_argument("synthesize_waveforms: amplitudes must be positive");
        const double carrier = 2.0 * std::numbers::pi * f0 *
                               (carrier_scales_with_time ? static_cast<double>(t + 1) : 1.0);
        s1[t] = std::polar(amplitudes1[t], carrier + phases1[t]);
        s2[t] = std::polar(amplitudes2[t], carrier + phases2[t]);
    }
    return SourcePair(std::move(s1), std::move(s2));
}

Scenario::Scenario(ArrayGeometry geometry, SourcePair sources, double sigma2)
    : geometry_(std::move(geometry)), sources_(std::move(sources)), sigma2_(sigma2)
{
    if (!(sigma2_ > 0.0) || !std::isfinite(sigma2_))
        throw std::invalid_argument("noise variance must be positive");
    if (geometry_.size() < 2)
        throw std::invalid_argument("scenario needs at least two sensors");
}

SnapshotMatrix synthesize_snapshots(const Scenario& sc, double nu1, double nu2,
                                    std::uint64_t noise_seed)
{
    return synthesize_snapshots(sc.geometry(), sc.sources().s1(), sc.sources().s2(), nu1, nu2,
                                sc.sigma2(), noise_seed);
}

SnapshotMatrix synthesize_snapshots(const ArrayGeometry& geometry,
                                    std::span<const Complex> s1,
                                    std::span<const Complex> s2, double nu1, double nu2,
                                    double sigma2, std::uint64_t noise_seed)
{
    if (s1.size() != s2.size())
        throw std::invalid_argument("synthesize_snapshots: waveform length mismatch");
    if (!(sigma2 >= 0.0))
        throw std::invalid_argument("synthesize_snapshots: negative noise variance");

    const ComplexVector a1 = geometry.steering_vector(nu1);
    const ComplexVector a2 = geometry.steering_vector(nu2);
    const double noise_scale = std::sqrt(sigma2 / 2.0);

    std::seed_seq seq{static_cast<std::uint32_t>(noise_seed),
                      static_cast<std::uint32_t>(noise_seed >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;

    SnapshotMatrix x(geometry.size(), s1.size());
    for (std::size_t t = 0; t < s1.size(); ++t) {
        for (std::size_t m = 0; m < geometry.size(); ++m) {
            const double re = normal(rng);
            const double im = normal(rng);
            x(m, t) = s1[t] * a1[m] + s2[t] * a2[m] + noise_scale * Complex{re, im};
        }
    }
    return x;
}

} // namespace arlkit
