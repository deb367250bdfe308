#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hypang/hyptrig.hpp"

namespace hypang
{

/**
 * @brief Metric data of a marked hyperbolic 4g-gon.
 *
 * Sides a_1..a_{4g} are listed clockwise; a_i runs from vertex Q_{i-1} to
 * Q_i, and angles[i-1] is the interior angle alpha_i at Q_i between a_i and
 * a_{i+1}. Indices in the accessors are 1-based and taken modulo 4g.
 */
struct CanonicalPolygon {
    int genus{0};
    std::vector<Length> sides;
    std::vector<Angle> angles;

    int size() const { return 4 * genus; }

    int wrap(int i) const
    {
        const int n = size();
        return ((i - 1) % n + n) % n;
    }

    Length side(int i) const { return sides[wrap(i)]; }
    Angle angle(int i) const { return angles[wrap(i)]; }
    Length& side(int i) { return sides[wrap(i)]; }
    Angle& angle(int i) { return angles[wrap(i)]; }

    /// Throws MalformedInput unless genus >= 2 and both arrays hold 4g finite values.
    void check_shape() const
    {
        if (genus < 2) {
            throw Error(ErrorCode::MalformedInput, "genus must be at least 2");
        }
        const auto n = static_cast<std::size_t>(size());
        if (sides.size() != n || angles.size() != n) {
            throw Error(ErrorCode::MalformedInput,
                        "expected " + std::to_string(n) + " sides and angles");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(sides[i]) || !std::isfinite(angles[i])) {
                throw Error(ErrorCode::MalformedInput, "non-finite polygon entry");
            }
        }
    }
};

/// Side length of the regular 4g-gon with interior angles pi/(2g):
/// cosh(s/2) = cos(pi/4g) / sin(pi/4g).
inline Length regular_side_length(int genus)
{
    const double t = kPi / (4.0 * genus);
    return 2.0 * std::acosh(std::cos(t) / std::sin(t));
}

/// The regular canonical 4g-gon.
inline CanonicalPolygon regular_polygon(int genus)
{
    if (genus < 2) {
        throw Error(ErrorCode::MalformedInput, "genus must be at least 2");
    }
    CanonicalPolygon p;
    p.genus = genus;
    p.sides.assign(4 * genus, regular_side_length(genus));
    p.angles.assign(4 * genus, kPi / (2.0 * genus));
    return p;
}

}  // namespace hypang
