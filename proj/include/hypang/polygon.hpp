#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hypang/canonical_polygon.hpp"
#include "hypang/embed.hpp"
#include "hypang/quad.hpp"

namespace hypang
{

constexpr double kDefaultTol = 1e-9;

struct ConditionCheck {
    std::string name;
    bool pass{false};
    double residual{0};
};

/** @brief Outcome of the five canonical-polygon conditions plus realizability */
struct ValidationReport {
    std::vector<ConditionCheck> checks;

    bool ok() const
    {
        for (const auto& c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return !checks.empty();
    }

    const ConditionCheck& operator[](const std::string& name) const
    {
        for (const auto& c : checks) {
            if (c.name == name) {
                return c;
            }
        }
        throw Error(ErrorCode::MalformedInput, "no condition named " + name);
    }

    /// " name (residual)" for every failing condition.
    std::string failures() const
    {
        std::string s;
        for (const auto& c : checks) {
            if (!c.pass) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3g", c.residual);
                s += " " + c.name + " (" + buf + ")";
            }
        }
        return s;
    }
};

/// Sign of alpha_i in the alternating-sum condition: odd indices count
/// positively in the first half, even indices in the second half.
inline int alternating_sign(int i, int genus)
{
    const bool odd = i % 2 == 1;
    return (i <= 2 * genus) == odd ? 1 : -1;
}

/// Checks the five defining conditions and that the boundary closes.
inline ValidationReport validate_canonical(const CanonicalPolygon& p, double tol = kDefaultTol)
{
    p.check_shape();
    const int g = p.genus;
    const int n = p.size();
    ValidationReport r;

    double side_res = 0.0;
    for (int i = 1; i <= 2 * g; ++i) {
        const double a = p.side(i), b = p.side(i + 2 * g);
        side_res = std::max(side_res, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
    }
    r.checks.push_back({"opposite_sides", side_res <= tol, side_res});

    double sum = 0.0, alt = 0.0, range_res = 0.0;
    bool in_range = true;
    for (int i = 1; i <= n; ++i) {
        const double a = p.angle(i);
        sum += a;
        alt += alternating_sign(i, g) * a;
        in_range = in_range && a > 0.0 && a < kPi;
        range_res = std::max({range_res, -a, a - kPi});
    }
    const double sum_res = std::abs(sum - 2.0 * kPi);
    r.checks.push_back({"angle_sum", sum_res <= tol, sum_res});
    r.checks.push_back({"angle_range", in_range, range_res});
    const double first_res = std::abs(p.angle(1) - p.angle(2 * g + 1));
    r.checks.push_back({"first_angle_pair", first_res <= tol, first_res});
    r.checks.push_back({"alternating_sum", std::abs(alt) <= tol, std::abs(alt)});

    const bool sides_positive = std::all_of(p.sides.begin(), p.sides.end(),
                                            [](double s) { return s > 0.0; });
    const double gap = sides_positive ? boundary_walk(p).magnitude() : INFINITY;
    r.checks.push_back({"closure", gap <= std::max(tol, kClosureTol), gap});
    return r;
}

/// Equal opposite angles, the hyperellipticity criterion for canonical polygons.
inline bool is_hyperelliptic(const CanonicalPolygon& p, double tol = kDefaultTol)
{
    p.check_shape();
    for (int i = 1; i <= 2 * p.genus; ++i) {
        if (!(std::abs(p.angle(i) - p.angle(i + 2 * p.genus)) <= tol)) {
            return false;
        }
    }
    return true;
}

/// Marked equivalence: every side (relative) and angle (absolute) agrees within tol.
inline bool equivalent(const CanonicalPolygon& p, const CanonicalPolygon& q,
                       double tol = kDefaultTol)
{
    if (p.genus != q.genus) {
        throw Error(ErrorCode::GenusMismatch, "polygons have different genus");
    }
    p.check_shape();
    q.check_shape();
    for (int i = 1; i <= p.size(); ++i) {
        const double a = p.side(i), b = q.side(i);
        if (!(std::abs(a - b) <= tol * std::max(a, b))) {
            return false;
        }
        if (!(std::abs(p.angle(i) - q.angle(i)) <= tol)) {
            return false;
        }
    }
    return true;
}

/// Largest side (relative) or angle (absolute) discrepancy between two marked polygons.
inline double polygon_deviation(const CanonicalPolygon& p, const CanonicalPolygon& q)
{
    if (p.genus != q.genus) {
        throw Error(ErrorCode::GenusMismatch, "polygons have different genus");
    }
    double d = 0.0;
    for (int i = 1; i <= p.size(); ++i) {
        const double a = p.side(i), b = q.side(i);
        d = std::max(d, std::abs(a - b) / std::max(a, b));
        d = std::max(d, std::abs(p.angle(i) - q.angle(i)));
    }
    return d;
}

/**
 * @brief Triangle of a fan decomposition.
 *
 * vertices holds the polygon vertex indices k of Q_k opposite the sides
 * tri.a, tri.b, tri.c, so vertices[0] carries tri.alpha and so on.
 */
struct FanTriangle {
    std::array<int, 3> vertices{};
    Triangle tri;
};

/**
 * @brief Fan of diagonals from Q_{4g} (with one detour through Q_{2g}).
 *
 * Diagonals: b_i = Q_{4g} Q_{i+1} for i != 2g and b_{2g} = Q_{2g} Q_{2g+2}.
 * Triangles: T_1 = Q_{4g} Q_1 Q_2; T_i = Q_{4g} Q_i Q_{i+1};
 * T_{2g} = Q_{2g} Q_{2g+1} Q_{2g+2}; T_{2g+1} = Q_{4g} Q_{2g} Q_{2g+2}.
 * The leftover quadrilateral S is Q_{4g} Q_{4g-3} Q_{4g-2} Q_{4g-1}.
 *
 * All vectors are indexed i-1 for the 1-based symbol index i. phi_i is the
 * angle between b_i and a_{i+1}; beta_i the angle between b_{i-1} and b_i
 * (beta_1 between a_1 and b_1). Both are taken literally for the two
 * irregular indices: phi_{2g} sits at Q_{2g}, beta_{2g} at Q_{2g} and
 * beta_{2g+1} at Q_{2g+2}; the angle at Q_{4g} of T_{2g+1} is gamma.
 */
struct FanDecomposition {
    int genus{0};
    std::vector<Length> diagonals;  // b_1..b_{4g-4}
    std::vector<Angle> phi;         // phi_1..phi_{4g-4}
    std::vector<Angle> beta;        // beta_1..beta_{4g-4}
    Angle gamma{0};
    std::vector<FanTriangle> triangles;  // T_1..T_{4g-4}
    QuadAngles quad;                     // A = Q_{4g}, B = Q_{4g-3}, C = Q_{4g-2}, D = Q_{4g-1}

    /// Sum of all fan angles at Q_{4g}, the quadrilateral's included.
    double angle_at_apex() const
    {
        const int g = genus;
        double s = gamma + quad.alpha;
        for (int i = 1; i <= 4 * g - 4; ++i) {
            if (i != 2 * g && i != 2 * g + 1) {
                s += beta[i - 1];
            }
        }
        return s;
    }
};

namespace detail
{

inline Angle interior_remainder(double x, int vertex)
{
    if (!(x > 0.0 && x < kPi)) {
        throw Error(ErrorCode::FanNotInterior,
                    "fan leaves the polygon at Q_" + std::to_string(vertex));
    }
    return x;
}

}  // namespace detail

/// Fan triangulation of a canonical polygon of genus >= 3 by repeated SAS solves.
inline FanDecomposition fan_triangulate(const CanonicalPolygon& p)
{
    p.check_shape();
    const int g = p.genus;
    if (g < 3) {
        throw Error(ErrorCode::GenusTooSmall, "fan decomposition needs genus >= 3");
    }
    const int n = 4 * g;
    FanDecomposition f;
    f.genus = g;
    f.diagonals.assign(n - 4, 0.0);
    f.phi.assign(n - 4, 0.0);
    f.beta.assign(n - 4, 0.0);
    auto b = [&](int i) -> Length& { return f.diagonals[i - 1]; };
    auto phi = [&](int i) -> Angle& { return f.phi[i - 1]; };
    auto beta = [&](int i) -> Angle& { return f.beta[i - 1]; };

    auto push = [&](int o_a, int o_b, int o_c, const Triangle& t) {
        f.triangles.push_back({{o_a, o_b, o_c}, t});
    };

    // T_1: a_1, a_2 around alpha_1.
    {
        const Triangle t = solve_sas(p.side(1), p.angle(1), p.side(2));
        push(2, n, 1, t);
        b(1) = t.c;
        phi(1) = t.alpha;
        beta(1) = t.beta;
    }
    // Generic step T_i = Q_{4g} Q_i Q_{i+1} from b_{i-1}, a_{i+1}.
    auto generic = [&](int i) {
        const Angle incl = detail::interior_remainder(p.angle(i) - phi(i - 1), i);
        const Triangle t = solve_sas(b(i - 1), incl, p.side(i + 1));
        push(i + 1, n, i, t);
        b(i) = t.c;
        phi(i) = t.alpha;
        beta(i) = t.beta;
    };
    for (int i = 2; i <= 2 * g - 1; ++i) {
        generic(i);
    }
    // T_{2g}: congruent copy of T_1 on a_{2g+1}, a_{2g+2}.
    const Triangle t2g = solve_sas(p.side(2 * g + 1), p.angle(2 * g + 1), p.side(2 * g + 2));
    push(2 * g + 2, 2 * g, 2 * g + 1, t2g);
    b(2 * g) = t2g.c;
    phi(2 * g) = t2g.beta;
    // T_{2g+1}: b_{2g-1}, b_{2g} around the remainder of alpha_{2g}.
    {
        const Angle incl =
            detail::interior_remainder(p.angle(2 * g) - phi(2 * g - 1) - t2g.beta, 2 * g);
        const Triangle t = solve_sas(b(2 * g - 1), incl, b(2 * g));
        push(2 * g + 2, n, 2 * g, t);
        b(2 * g + 1) = t.c;
        beta(2 * g) = incl;
        beta(2 * g + 1) = t.alpha;
        f.gamma = t.beta;
        phi(2 * g + 1) = t2g.alpha + t.alpha;
    }
    for (int i = 2 * g + 2; i <= n - 4; ++i) {
        generic(i);
    }
    // S from b_{4g-4}, a_{4g-2}, a_{4g-1}, a_{4g} and its angle at Q_{4g-3}.
    {
        const Angle at_b = detail::interior_remainder(p.angle(n - 3) - phi(n - 4), n - 3);
        const std::array<Length, 4> sides{b(n - 4), p.side(n - 2), p.side(n - 1), p.side(n)};
        const Length diag = side_from_sas(sides[0], sides[1], at_b);
        f.quad = quad_from_diagonal(sides, diag);
    }
    return f;
}

}  // namespace hypang
