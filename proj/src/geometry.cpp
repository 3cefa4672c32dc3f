// SPDX-License-Identifier: Apache-2.0
#include "arlkit/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace arlkit {

namespace {

constexpr std::string_view kBullet = "\xE2\x80\xA2";     // U+2022
constexpr std::string_view kWhiteBullet = "\xE2\x97\xA6"; // U+25E6

double parse_real(std::string_view text, std::string_view what)
{
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

int parse_int(std::string_view text, std::string_view what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

// Splits "key=value" and checks the key.
std::string_view field_value(std::string_view field, std::string_view key)
{
    const auto eq = field.find('=');
    if (eq == std::string_view::npos || field.substr(0, eq) != key)
        throw std::invalid_argument("expected '" + std::string(key) + "=<value>', got '" +
                                    std::string(field) + "'");
    return field.substr(eq + 1);
}

} // namespace

ArrayGeometry::ArrayGeometry(std::vector<double> positions, double wavenumber)
    : positions_(std::move(positions)), wavenumber_(wavenumber), alpha_(0.0), beta_(0.0)
{
    for (double d : positions_) {
        alpha_ += d * d;
        beta_ += d * d * d;
    }
}

ArrayGeometry ArrayGeometry::from_positions(std::vector<double> positions, double wavenumber)
{
    if (positions.empty())
        throw std::invalid_argument("array needs at least one sensor");
    if (!(wavenumber > 0.0) || !std::isfinite(wavenumber))
        throw std::invalid_argument("wavenumber must be positive");
    for (std::size_t m = 0; m < positions.size(); ++m) {
        if (!std::isfinite(positions[m]))
            throw std::invalid_argument("sensor positions must be finite");
        if (m > 0 && !(positions[m] > positions[m - 1]))
            throw std::invalid_argument("sensor positions must be strictly increasing");
    }
    const double origin = positions.front();
    for (double& d : positions)
        d -= origin;
    positions.front() = 0.0;
    return ArrayGeometry(std::move(positions), wavenumber);
}

ArrayGeometry ArrayGeometry::ula(int sensors, double spacing, double wavenumber)
{
    if (sensors < 1)
        throw std::invalid_argument("ULA needs M >= 1");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw std::invalid_argument("ULA spacing must be positive");
    std::vector<double> positions(static_cast<std::size_t>(sensors));
    for (int m = 0; m < sensors; ++m)
        positions[static_cast<std::size_t>(m)] = m * spacing;
    return from_positions(std::move(positions), wavenumber);
}

ArrayGeometry ArrayGeometry::from_pattern(std::string_view pattern, double spacing,
                                          double wavenumber)
{
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw std::invalid_argument("pattern spacing must be positive");

    std::vector<double> positions;
    int slot = 0;
    while (!pattern.empty()) {
        const char c = pattern.front();
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            pattern.remove_prefix(1);
            continue;
        }
        bool occupied = false;
        if (c == 'x') {
            occupied = true;
            pattern.remove_prefix(1);
        } else if (c == '.') {
            pattern.remove_prefix(1);
        } else if (pattern.starts_with(kBullet)) {
            occupied = true;
            pattern.remove_prefix(kBullet.size());
        } else if (pattern.starts_with(kWhiteBullet)) {
            pattern.remove_prefix(kWhiteBullet.size());
        } else {
            throw std::invalid_argument("unknown pattern character '" + std::string(1, c) + "'");
        }
        if (occupied)
            positions.push_back(slot * spacing);
        ++slot;
    }
    if (slot == 0)
        throw std::invalid_argument("empty array pattern");
    if (positions.empty())
        throw std::invalid_argument("array pattern has no occupied slot");
    return from_positions(std::move(positions), wavenumber);
}

ArrayGeometry ArrayGeometry::parse(std::string_view spec, double wavenumber)
{
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("geometry must look like 'ula:M=6,d=0.5' or 'pattern:x..x,d=0.5'");
    const std::string_view kind = spec.substr(0, colon);
    const std::string_view body = spec.substr(colon + 1);
    const auto comma = body.rfind(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("geometry is missing ',d=<spacing>'");
    const double spacing = parse_real(field_value(body.substr(comma + 1), "d"), "spacing");
    const std::string_view head = body.substr(0, comma);

    if (kind == "ula")
        return ula(parse_int(field_value(head, "M"), "sensor count"), spacing, wavenumber);
    if (kind == "pattern")
        return from_pattern(head, spacing, wavenumber);
    throw std::invalid_argument("unknown geometry kind '" + std::string(kind) + "'");
}

std::vector<std::complex<double>> ArrayGeometry::steering_vector(double nu) const
{
    std::vector<std::complex<double>> a(positions_.size());
    std::transform(positions_.begin(), positions_.end(), a.begin(),
                   [nu](double d) { return std::polar(1.0, nu * d); });
    return a;
}

double alpha(const ArrayGeometry& g) noexcept { return g.alpha(); }
double beta(const ArrayGeometry& g) noexcept { return g.beta(); }

} // namespace arlkit
