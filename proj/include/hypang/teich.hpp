#pragma once

// Angle coordinates for canonical polygons of genus g >= 3: 6g-5 angles read
// off the fan from Q_{4g}, and the reconstruction of the polygon from them.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hypang/polygon.hpp"
#include "hypang/quad.hpp"

namespace hypang
{

/**
 * @brief Angle coordinates of the fan chart.
 *
 * theta[i-1] = alpha_i for i = 1..4g-4 except theta_{2g+1} = phi_1 (alpha_{2g+1}
 * repeats alpha_1), and theta_{4g-4+i} = beta_i for i = 1..2g-1.
 */
struct TeichParams {
    int genus{0};
    std::vector<Angle> theta;

    static int size_for(int genus) { return 6 * genus - 5; }
};

/// Consistency tolerance on the quadrilateral's angle sum.
constexpr double kConsistencyTol = 1e-7;
/// Reconstructed polygons must pass validation at this tolerance.
constexpr double kOutputTol = 1e-8;

/**
 * @brief Closes a quadrilateral with four known sides from its angle sums.
 *
 * The hinge is parametrized by the diagonal AC. Along it the alternating sum
 * alpha - beta + gamma - delta is strictly decreasing (alpha and gamma open as
 * BD grows, which shrinks AC), so it is solved by bisection; the plain angle
 * sum is not monotone on the hinge and is only checked afterwards.
 */
inline QuadAngles solve_quad_teich(const std::array<Length, 4>& sides, double angle_sum,
                                   double alt_sum, double tol_consistency = kConsistencyTol,
                                   const BisectionOptions& opt = {})
{
    for (double s : sides) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw Error(ErrorCode::MalformedInput, "quadrilateral sides must be positive");
        }
    }
    if (!std::isfinite(angle_sum) || !std::isfinite(alt_sum)) {
        throw Error(ErrorCode::MalformedInput, "non-finite quadrilateral target");
    }
    const auto [lo, hi] = hinge_interval(sides, opt.bracket_eps);
    if (!(lo < hi)) {
        throw Error(ErrorCode::NoBracket, "sides admit no quadrilateral");
    }
    auto alt = [&](double d) { return quad_from_diagonal(sides, d).alt_sum(); };
    const double alt_lo = alt(lo), alt_hi = alt(hi);
    if (!(alt_sum <= alt_lo && alt_sum >= alt_hi)) {
        throw Error(ErrorCode::NoBracket, "alternating sum target outside the hinge range");
    }
    const double d = bisect_decreasing(alt, lo, hi, alt_sum, opt);
    QuadAngles q = quad_from_diagonal(sides, d);
    if (!(std::abs(q.sum() - angle_sum) <= tol_consistency)) {
        throw Error(ErrorCode::ImageConsistencyError,
                    "angle sum misses its target by " + std::to_string(q.sum() - angle_sum));
    }
    return q;
}

/// Reads the fan coordinates off a canonical polygon of genus >= 3.
inline TeichParams extract_theta(const CanonicalPolygon& p)
{
    p.check_shape();
    if (p.genus < 3) {
        throw Error(ErrorCode::GenusTooSmall, "the fan chart needs genus >= 3");
    }
    const FanDecomposition fan = fan_triangulate(p);
    const int g = p.genus;
    TeichParams t;
    t.genus = g;
    for (int i = 1; i <= 4 * g - 4; ++i) {
        t.theta.push_back(i == 2 * g + 1 ? fan.phi[0] : p.angle(i));
    }
    for (int i = 1; i <= 2 * g - 1; ++i) {
        t.theta.push_back(fan.beta[i - 1]);
    }
    return t;
}

namespace detail
{

inline Angle chart_angle(double x, const char* what)
{
    if (!(x > 0.0 && x < kPi)) {
        throw Error(ErrorCode::ParameterDomainError, std::string(what) + " leaves (0, pi)");
    }
    return x;
}

}  // namespace detail

/**
 * @brief Rebuilds the canonical polygon from its fan coordinates.
 *
 * Triangles T_1..T_{2g-1} follow from the apex-angle chain; T_{2g} is the
 * copy of T_1 across Q_{2g+1}, T_{2g+1} closes the detour at Q_{2g}, and
 * T_{2g+2}..T_{4g-4} reuse the sides a_3..a_{2g-2}. The last quadrilateral
 * is fixed by the angle sum and the alternating-sum condition, one of which
 * is redundant on the image: it is checked, not solved.
 */
inline CanonicalPolygon reconstruct_teich(const TeichParams& params,
                                          double tol_consistency = kConsistencyTol)
{
    const int g = params.genus;
    if (g < 3) {
        throw Error(ErrorCode::GenusTooSmall, "the fan chart needs genus >= 3");
    }
    if (params.theta.size() != static_cast<std::size_t>(TeichParams::size_for(g))) {
        throw Error(ErrorCode::MalformedInput, "expected 6g-5 angles");
    }
    for (double x : params.theta) {
        if (!std::isfinite(x) || !(x > 0.0 && x < kPi)) {
            throw Error(ErrorCode::ParameterDomainError, "every angle must lie in (0, pi)");
        }
    }
    const int n = 4 * g;
    auto theta = [&](int i) { return params.theta[i - 1]; };
    auto alpha = [&](int i) { return i == 2 * g + 1 ? theta(1) : theta(i); };
    std::vector<Angle> phi_v(n - 3, 0.0), beta_v(n - 3, 0.0);
    std::vector<Length> b_v(n - 3, 0.0), a_v(2 * g + 1, 0.0);
    auto phi = [&](int i) -> Angle& { return phi_v[i]; };
    auto beta = [&](int i) -> Angle& { return beta_v[i]; };
    auto b = [&](int i) -> Length& { return b_v[i]; };
    auto a = [&](int i) -> Length& { return a_v[i]; };
    using detail::chart_angle;

    try {
        phi(1) = theta(2 * g + 1);
        for (int i = 1; i <= 2 * g - 1; ++i) {
            beta(i) = theta(4 * g - 4 + i);
        }
        // T_1 is fixed by its three angles.
        a(1) = side_from_aaa(beta(1), phi(1), alpha(1));
        a(2) = side_from_aaa(alpha(1), beta(1), phi(1));
        phi(2) = angle_h(chart_angle(alpha(2) - phi(1), "alpha_2 - phi_1"), phi(1), alpha(1),
                         beta(1), beta(2));
        for (int i = 3; i <= 2 * g - 1; ++i) {
            phi(i) = angle_h(chart_angle(alpha(i) - phi(i - 1), "alpha_i - phi_{i-1}"),
                             phi(i - 1), alpha(i - 1) - phi(i - 2), beta(i - 1), beta(i));
        }
        for (int i = 2; i <= 2 * g - 1; ++i) {
            a(i + 1) = side_from_aaa(alpha(i) - phi(i - 1), beta(i), phi(i));
        }
        b(2 * g - 1) = side_from_aaa(phi(2 * g - 1), alpha(2 * g - 1) - phi(2 * g - 2),
                                     beta(2 * g - 1));
        b(2 * g) = b(1) = side_from_aaa(phi(1), alpha(1), beta(1));

        const Angle incl =
            chart_angle(alpha(2 * g) - phi(2 * g - 1) - beta(1), "remainder at Q_2g");
        const Angle gamma = angle_f(b(2 * g), incl, b(2 * g - 1));
        phi(2 * g + 1) = phi(1) + angle_psi(incl, b(2 * g - 1), gamma);
        b(2 * g + 1) = side_from_aaa(phi(2 * g + 1) - phi(1), incl, gamma);

        const Angle rem = chart_angle(alpha(2 * g + 2) - phi(2 * g + 1), "remainder at Q_2g+2");
        beta(2 * g + 2) = angle_f(a(3), rem, b(2 * g + 1));
        phi(2 * g + 2) = angle_psi(rem, b(2 * g + 1), beta(2 * g + 2));

        for (int i = 3; i <= 2 * g - 4; ++i) {
            b(2 * g + i - 1) = side_from_aaa(phi(2 * g + i - 1),
                                             alpha(2 * g + i - 1) - phi(2 * g + i - 2),
                                             beta(2 * g + i - 1));
            const Angle r = chart_angle(alpha(2 * g + i) - phi(2 * g + i - 1), "fan remainder");
            beta(2 * g + i) = angle_f(a(i + 1), r, b(2 * g + i - 1));
            phi(2 * g + i) = angle_psi(r, b(2 * g + i - 1), beta(2 * g + i));
        }
        b(n - 4) = side_from_aaa(phi(n - 4), alpha(n - 4) - phi(n - 5), beta(n - 4));

        double apex = gamma, known = 0.0, known_alt = 0.0;
        for (int i = 1; i <= n - 4; ++i) {
            known += alpha(i);
            known_alt += alternating_sign(i, g) * alpha(i);
            if (i <= 2 * g - 1 || i >= 2 * g + 2) {
                apex += beta(i);
            }
        }
        // Angles of S: A = Q_{4g} (alpha_{4g} - apex), B = Q_{4g-3} (alpha_{4g-3} - phi_{4g-4}),
        // C = alpha_{4g-2}, D = alpha_{4g-1}. The angle sum and the alternating
        // condition (signs -, +, -, + on alpha_{4g-3..4g}) pin their sums.
        const double sum_target = 2.0 * kPi - known - apex - phi(n - 4);
        const double alt_target = -known_alt - apex + phi(n - 4);
        const std::array<Length, 4> sides{b(n - 4), a(2 * g - 2), a(2 * g - 1), a(2 * g)};

        QuadAngles s;
        try {
            s = solve_quad_teich(sides, sum_target, alt_target, tol_consistency);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NoBracket) {
                throw Error(ErrorCode::ImageConsistencyError,
                            std::string("no closing quadrilateral: ") + e.what());
            }
            throw;
        }

        CanonicalPolygon p;
        p.genus = g;
        p.sides.assign(n, 0.0);
        p.angles.assign(n, 0.0);
        for (int i = 1; i <= 2 * g; ++i) {
            p.side(i) = p.side(i + 2 * g) = a(i);
        }
        for (int i = 1; i <= n - 4; ++i) {
            p.angle(i) = alpha(i);
        }
        p.angle(n - 3) = chart_angle(phi(n - 4) + s.beta, "alpha_{4g-3}");
        p.angle(n - 2) = chart_angle(s.gamma, "alpha_{4g-2}");
        p.angle(n - 1) = chart_angle(s.delta, "alpha_{4g-1}");
        p.angle(n) = chart_angle(apex + s.alpha, "alpha_{4g}");

        const ValidationReport report = validate_canonical(p, kOutputTol);
        if (!report.ok()) {
            throw Error(ErrorCode::ImageConsistencyError,
                        "reconstructed polygon fails the canonical conditions:" +
                            report.failures());
        }
        return p;
    } catch (const Error& e) {
        switch (e.code()) {
            case ErrorCode::ImageConsistencyError:
            case ErrorCode::ParameterDomainError:
                throw;
            default:
                throw Error(ErrorCode::ParameterDomainError, e.what());
        }
    }
}

}  // namespace hypang
