// SPDX-License-Identifier: Apache-2.0
// Test-only reference computations, kept independent of the library code paths.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <utility>

namespace arlkit::oracle {

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Inverse by Gauss-Jordan elimination with partial pivoting.
inline Matrix2 invert(Matrix2 a)
{
    Matrix2 inv{{{1.0, 0.0}, {0.0, 1.0}}};
    for (int col = 0; col < 2; ++col) {
        int pivot = col;
        if (col == 0 && std::abs(a[1][0]) > std::abs(a[0][0]))
            pivot = 1;
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const double p = a[col][col];
        for (int k = 0; k < 2; ++k) {
            a[col][k] /= p;
            inv[col][k] /= p;
        }
        const int other = 1 - col;
        const double f = a[other][col];
        for (int k = 0; k < 2; ++k) {
            a[other][k] -= f * a[col][k];
            inv[other][k] -= f * inv[col][k];
        }
    }
    return inv;
}

/// Re{ s1^H s2 sum d^2 exp(-j d delta) } by plain summation over cosines and sines.
inline double re_eta(std::span<const double> positions, std::complex<double> inner, double delta)
{
    double c = 0.0;
    double s = 0.0;
    for (double d : positions) {
        c += d * d * std::cos(d * delta);
        s += d * d * std::sin(d * delta);
    }
    // (x + jy)(c - js) real part
    return inner.real() * c + inner.imag() * s;
}

inline double relative_error(double got, double want)
{
    return std::abs(got - want) / std::abs(want);
}

} // namespace arlkit::oracle
