#pragma once

// Quadrilaterals ABCD split along the diagonal AC, and the monotone bisection
// used by both hinge solvers.

#include <array>
#include <cmath>

#include "hypang/hyptrig.hpp"

namespace hypang
{

/**
 * @brief Angles of a quadrilateral ABCD in natural order.
 *
 * alpha at A, beta at B, gamma at C, delta at D; diag is the length of AC and
 * sides holds AB, BC, CD, DA.
 */
struct QuadAngles {
    Angle alpha{0}, beta{0}, gamma{0}, delta{0};
    Length diag{0};
    std::array<Length, 4> sides{};

    double sum() const { return alpha + beta + gamma + delta; }
    double alt_sum() const { return alpha - beta + gamma - delta; }
};

/// Quadrilateral with four given sides, B and D on opposite sides of the
/// diagonal AC of length `diag`.
inline QuadAngles quad_from_diagonal(const std::array<Length, 4>& s, Length diag)
{
    QuadAngles q;
    q.sides = s;
    q.diag = diag;
    const Angle bac = angle_from_sss(s[0], diag, s[1]);
    const Angle bca = angle_from_sss(s[1], diag, s[0]);
    const Angle cad = angle_from_sss(s[3], diag, s[2]);
    const Angle acd = angle_from_sss(s[2], diag, s[3]);
    q.alpha = bac + cad;
    q.beta = angle_from_sss(s[0], s[1], diag);
    q.gamma = bca + acd;
    q.delta = angle_from_sss(s[2], s[3], diag);
    return q;
}

/// Interval of diagonal lengths for which both triangles exist, shrunk by eps.
inline std::array<Length, 2> hinge_interval(const std::array<Length, 4>& s, double eps)
{
    const double lo = std::max(std::abs(s[0] - s[1]), std::abs(s[2] - s[3])) + eps;
    const double hi = std::min(s[0] + s[1], s[2] + s[3]) - eps;
    return {lo, hi};
}

struct BisectionOptions {
    double bracket_eps = 1e-9;  ///< shrink of the open hinge interval
    double x_tol = 1e-13;
    double f_tol = 1e-12;
    int max_iter = 200;
};

/// Root of f(x) = target for f decreasing on [lo, hi] with f(lo) >= target >= f(hi).
template <class F>
double bisect_decreasing(F&& f, double lo, double hi, double target,
                         const BisectionOptions& opt = {})
{
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < opt.max_iter; ++it) {
        mid = 0.5 * (lo + hi);
        const double r = f(mid) - target;
        if (std::abs(r) < opt.f_tol || hi - lo < opt.x_tol) {
            break;
        }
        if (r > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return mid;
}

}  // namespace hypang
