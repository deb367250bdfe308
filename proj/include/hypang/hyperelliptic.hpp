#pragma once

// Angle coordinates for hyperelliptic canonical polygons (equal opposite
// angles), genus g >= 2: 4g-2 angles of the triangles fanning out from the
// center O of the half-turn symmetry.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hypang/embed.hpp"
#include "hypang/polygon.hpp"
#include "hypang/quad.hpp"
#include "hypang/teich.hpp"

namespace hypang
{

/**
 * @brief Angle coordinates of the central chart.
 *
 * theta_i = alpha_i for i = 1..2g-3, theta_{2g-3+i} = delta_i for
 * i = 1..2g-1, theta_{4g-3} = beta and theta_{4g-2} = phi_1.
 */
struct HyperParams {
    int genus{0};
    std::vector<Angle> theta;

    static int size_for(int genus) { return 4 * genus - 2; }

    Angle alpha(int i) const { return theta[i - 1]; }
    Angle delta(int i) const { return theta[2 * genus - 4 + i]; }
    Angle beta() const { return theta[4 * genus - 4]; }
    Angle phi1() const { return theta[4 * genus - 3]; }

    /// Throws ParameterDomainError unless every angle is in (0, pi) and the
    /// given central angles leave room for a positive delta_{2g}.
    void check() const
    {
        if (genus < 2) {
            throw Error(ErrorCode::GenusTooSmall, "hyperelliptic chart needs genus >= 2");
        }
        if (theta.size() != static_cast<std::size_t>(size_for(genus))) {
            throw Error(ErrorCode::MalformedInput, "expected 4g-2 angles");
        }
        double dsum = 0.0;
        for (double x : theta) {
            if (!std::isfinite(x) || !(x > 0.0 && x < kPi)) {
                throw Error(ErrorCode::ParameterDomainError, "every angle must lie in (0, pi)");
            }
        }
        for (int i = 1; i <= 2 * genus - 1; ++i) {
            dsum += delta(i);
        }
        if (!(dsum < kPi)) {
            throw Error(ErrorCode::ParameterDomainError, "central angles leave no room for delta_2g");
        }
    }
};

/**
 * @brief Triangles from the symmetry center O to the sides a_1..a_{2g}.
 *
 * T_k = O Q_{k-1} Q_k (Q_0 = Q_{4g}). Its Triangle stores alpha = delta_k at O,
 * beta at Q_{k-1}, gamma = phi_k at Q_k, with a = a_k, b = |O Q_k|,
 * c = |O Q_{k-1}|.
 */
struct CentralFan {
    int genus{0};
    Complex center{kI};
    std::vector<Length> rays;            // |O Q_k|, k = 1..4g
    std::vector<Angle> central_angles;   // delta_1..delta_{2g}
    std::vector<Angle> phi;              // phi_k = angle Q_{k-1} Q_k O, k = 1..2g
    Angle beta{0};                       // angle O Q_{4g} Q_1
    std::vector<Triangle> triangles;     // T_1..T_{2g}
    PlanePolygon plane;
};

/// Realizes a hyperelliptic polygon and measures the fan around the common
/// midpoint of the main diagonals Q_k Q_{k+2g}.
inline CentralFan central_fan(const CanonicalPolygon& p, double tol = 1e-8)
{
    p.check_shape();
    if (!is_hyperelliptic(p)) {
        throw Error(ErrorCode::NotHyperelliptic, "opposite angles differ");
    }
    const int g = p.genus;
    CentralFan f;
    f.genus = g;
    f.plane = realize(p);
    const PlanePolygon& pp = f.plane;
    f.center = midpoint(pp.q(1), pp.q(2 * g + 1));
    for (int k = 2; k <= 2 * g; ++k) {
        const Complex m = midpoint(pp.q(k), pp.q(k + 2 * g));
        if (!(distance(m, f.center) <= tol)) {
            throw Error(ErrorCode::MidpointMismatch,
                        "diagonal midpoints scatter by " + std::to_string(distance(m, f.center)));
        }
    }
    const Complex o = f.center;
    for (int k = 1; k <= 4 * g; ++k) {
        f.rays.push_back(distance(o, pp.q(k)));
    }
    f.beta = angle_at(o, pp.q(0), pp.q(1));
    for (int k = 1; k <= 2 * g; ++k) {
        const Complex prev = pp.q(k - 1), cur = pp.q(k);
        Triangle t;
        t.alpha = angle_at(prev, o, cur);
        t.beta = angle_at(o, prev, cur);
        t.gamma = angle_at(prev, cur, o);
        t.a = distance(prev, cur);
        t.b = distance(o, cur);
        t.c = distance(o, prev);
        f.central_angles.push_back(t.alpha);
        f.phi.push_back(t.gamma);
        f.triangles.push_back(t);
    }
    return f;
}

inline HyperParams extract_theta_h(const CanonicalPolygon& p)
{
    const CentralFan f = central_fan(p);
    const int g = p.genus;
    HyperParams h;
    h.genus = g;
    for (int i = 1; i <= 2 * g - 3; ++i) {
        h.theta.push_back(p.angle(i));
    }
    for (int i = 1; i <= 2 * g - 1; ++i) {
        h.theta.push_back(f.central_angles[i - 1]);
    }
    h.theta.push_back(f.beta);
    h.theta.push_back(f.phi[0]);
    return h;
}

/**
 * @brief Quadrilateral ABCD from AB, AD, the two angles at A on either side
 * of the diagonal AC, and the sum of the angles at B, C and D.
 *
 * Pushing C outward along the ray from A grows the quadrilateral and so
 * strictly lowers that three-angle sum; t = AC is found by bisection.
 * Returned angles: alpha at A, beta at B, gamma at C, delta at D; diag = t.
 */
inline QuadAngles solve_quad_hinge(Length ab, Length ad, Angle angle_bac, Angle angle_cad,
                                   double three_angle_sum, const BisectionOptions& opt = {})
{
    if (!(ab > 0.0) || !(ad > 0.0) || !std::isfinite(ab) || !std::isfinite(ad)) {
        throw Error(ErrorCode::MalformedInput, "hinge sides must be positive");
    }
    for (double x : {angle_bac, angle_cad}) {
        if (!(x > 0.0 && x < kPi)) {
            throw Error(ErrorCode::MalformedInput, "hinge angles must lie in (0, pi)");
        }
    }
    if (!(three_angle_sum > 0.0 && three_angle_sum < 3.0 * kPi)) {
        throw Error(ErrorCode::HingeNoBracket, "three-angle sum outside (0, 3 pi)");
    }
    auto eval = [&](double t) {
        const Triangle abc = solve_sas(ab, angle_bac, t);  // alpha at C, beta at B
        const Triangle acd = solve_sas(ad, angle_cad, t);  // alpha at C, beta at D
        QuadAngles q;
        q.alpha = angle_bac + angle_cad;
        q.beta = abc.beta;
        q.gamma = abc.alpha + acd.alpha;
        q.delta = acd.beta;
        q.diag = t;
        q.sides = {ab, abc.c, acd.c, ad};
        return q;
    };
    auto three = [&](double t) {
        const QuadAngles q = eval(t);
        return q.beta + q.gamma + q.delta;
    };
    const double lo = opt.bracket_eps;
    if (!(three(lo) >= three_angle_sum)) {
        throw Error(ErrorCode::HingeNoBracket, "three-angle sum above the attainable range");
    }
    double hi = std::max({ab, ad, 1.0});
    while (three(hi) > three_angle_sum) {
        hi *= 2.0;
        if (hi > 256.0) {
            throw Error(ErrorCode::HingeNoBracket, "three-angle sum below the attainable range");
        }
    }
    const double t = bisect_decreasing(three, lo, hi, three_angle_sum, opt);
    return eval(t);
}

/**
 * @brief Rebuilds a hyperelliptic canonical polygon from its central coordinates.
 *
 * The chain of apex angles fixes T_1..T_{2g-2}; the quadrilateral
 * O Q_{2g-2} Q_{2g-1} Q_{2g} is closed by solve_quad_hinge, using
 * |O Q_{2g}| = |O Q_{4g}|, delta_{2g} = pi - sum delta_i and the half-polygon
 * angle sum alpha_1 + ... + alpha_{2g} = pi. The second half of the polygon
 * is the half-turn image of the first, so alpha_{i+2g} = alpha_i and
 * a_{i+2g} = a_i hold exactly.
 */
inline CanonicalPolygon reconstruct_hyperelliptic(const HyperParams& h)
{
    h.check();
    const int g = h.genus;
    const int n = 4 * g;
    using detail::chart_angle;
    std::vector<Angle> alpha(2 * g + 1, 0.0), phi(2 * g + 1, 0.0);
    std::vector<Length> a(2 * g + 1, 0.0);
    for (int i = 1; i <= 2 * g - 3; ++i) {
        alpha[i] = h.alpha(i);
    }
    double dsum = 0.0;
    for (int i = 1; i <= 2 * g - 1; ++i) {
        dsum += h.delta(i);
    }
    const Angle delta_last = kPi - dsum;
    const Angle beta = h.beta();

    QuadAngles quad;
    try {
        // T_1 = O Q_{4g} Q_1: delta_1 at O, beta at Q_{4g}, phi_1 at Q_1.
        phi[1] = h.phi1();
        const Triangle t1 = solve_aaa(h.delta(1), beta, phi[1]);
        a[1] = t1.a;
        const Length ray_last = t1.c;  // |O Q_{4g}| = |O Q_{2g}|
        Length ray = t1.b;             // |O Q_k| for the latest k
        Angle far = beta;              // angle of T_{k} at Q_{k-1}
        for (int k = 2; k <= 2 * g - 2; ++k) {
            const Angle rem = chart_angle(alpha[k - 1] - phi[k - 1], "alpha_{k-1} - phi_{k-1}");
            phi[k] = angle_h(rem, phi[k - 1], far, h.delta(k - 1), h.delta(k));
            const Triangle t = solve_aaa(h.delta(k), rem, phi[k]);
            a[k] = t.a;
            ray = t.b;
            far = rem;
        }
        double known = 0.0;
        for (int i = 1; i <= 2 * g - 3; ++i) {
            known += alpha[i];
        }
        const double three = kPi - known - phi[2 * g - 2] - beta;
        // A = O, B = Q_{2g-2}, C = Q_{2g-1}, D = Q_{2g}.
        quad = solve_quad_hinge(ray, ray_last, h.delta(2 * g - 1), delta_last, three);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::HingeNoBracket || e.code() == ErrorCode::ParameterDomainError) {
            throw;
        }
        throw Error(ErrorCode::ParameterDomainError, e.what());
    }
    alpha[2 * g - 2] = chart_angle(phi[2 * g - 2] + quad.beta, "alpha_{2g-2}");
    alpha[2 * g - 1] = chart_angle(quad.gamma, "alpha_{2g-1}");
    alpha[2 * g] = chart_angle(beta + quad.delta, "alpha_{2g}");
    a[2 * g - 1] = quad.sides[1];
    a[2 * g] = quad.sides[2];

    CanonicalPolygon p;
    p.genus = g;
    p.sides.assign(n, 0.0);
    p.angles.assign(n, 0.0);
    for (int i = 1; i <= 2 * g; ++i) {
        p.side(i) = p.side(i + 2 * g) = a[i];
        p.angle(i) = p.angle(i + 2 * g) = alpha[i];
    }
    const ValidationReport report = validate_canonical(p, kOutputTol);
    if (!report.ok()) {
        throw Error(ErrorCode::ParameterDomainError,
                    "reconstructed polygon fails the canonical conditions:" + report.failures());
    }
    return p;
}

}  // namespace hypang
