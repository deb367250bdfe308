#pragma once

// Closed-form trigonometry of hyperbolic triangles (curvature -1).
//
// The textbook expressions (cosine rules, cosh/arccosh forms) lose all
// precision for short sides and small angles, so every function here is
// evaluated through the equivalent half-angle / sinh^2(x/2) identities and
// finished with atan2 or asinh. The value computed is the same quantity.

#include <algorithm>
#include <cmath>
#include <compare>
#include <numbers>

#include "hypang/errors.hpp"

namespace hypang
{

/// Interior angle, radians.
using Angle = double;
/// Hyperbolic length.
using Length = double;

constexpr double kPi = std::numbers::pi;

/// Arguments of arccos/arccosh within this of the domain boundary are clamped.
constexpr double kClampTol = 1e-12;

/** @brief Hyperbolic triangle: side a opposite alpha, b opposite beta, c opposite gamma */
struct Triangle {
    Length a{0}, b{0}, c{0};
    Angle alpha{0}, beta{0}, gamma{0};

    double angle_sum() const { return alpha + beta + gamma; }
    /// Area, equal to the angle defect.
    double defect() const { return kPi - angle_sum(); }
};

namespace detail
{

inline double sq(double x) { return x * x; }

inline void require_finite(double x, const char* what)
{
    if (!std::isfinite(x)) {
        throw Error(ErrorCode::MalformedInput, std::string(what) + " is not finite");
    }
}

inline void require_angle(double x, const char* what)
{
    require_finite(x, what);
    if (!(x > 0.0 && x < kPi)) {
        throw Error(ErrorCode::MalformedInput,
                    std::string(what) + " must lie in (0, pi)");
    }
}

inline void require_length(double x, const char* what, bool allow_zero)
{
    require_finite(x, what);
    if (allow_zero ? !(x >= 0.0) : !(x > 0.0)) {
        throw Error(ErrorCode::MalformedInput,
                    std::string(what) + (allow_zero ? " must be >= 0" : " must be > 0"));
    }
}

}  // namespace detail

/// Third side opposite gamma, from two sides and their included angle.
/// cosh c = cosh a cosh b - sinh a sinh b cos gamma
inline Length side_from_sas(Length a, Length b, Angle gamma)
{
    using detail::sq;
    detail::require_length(a, "side a", true);
    detail::require_length(b, "side b", true);
    detail::require_angle(gamma, "angle gamma");
    // sinh^2(c/2) = sinh^2((a-b)/2) + sinh a sinh b sin^2(gamma/2)
    const double s = sq(std::sinh(0.5 * (a - b))) +
                     std::sinh(a) * std::sinh(b) * sq(std::sin(0.5 * gamma));
    return 2.0 * std::asinh(std::sqrt(s));
}

/// Angle between sides a and b (opposite c), from three sides.
inline Angle angle_from_sss(Length a, Length b, Length c)
{
    using detail::sq;
    detail::require_length(a, "side a", false);
    detail::require_length(b, "side b", false);
    detail::require_length(c, "side c", false);
    const double hc = sq(std::sinh(0.5 * c));
    // sinh a sinh b sin^2(g/2) and sinh a sinh b cos^2(g/2)
    double s = hc - sq(std::sinh(0.5 * (a - b)));
    double k = sq(std::sinh(0.5 * (a + b))) - hc;
    const double scale = s + k;
    if (s < -kClampTol * scale || k < -kClampTol * scale) {
        throw Error(ErrorCode::TriangleInequalityViolated,
                    "sides do not form a triangle");
    }
    s = std::max(s, 0.0);
    k = std::max(k, 0.0);
    return 2.0 * std::atan2(std::sqrt(s), std::sqrt(k));
}

/// Third angle of the triangle with side c between the angles alpha and beta.
/// cos gamma = -cos alpha cos beta + sin alpha sin beta cosh c
inline Angle angle_psi(Angle alpha, Length c, Angle beta)
{
    using detail::sq;
    detail::require_angle(alpha, "angle alpha");
    detail::require_angle(beta, "angle beta");
    detail::require_length(c, "side c", true);
    if (alpha + beta >= kPi) {
        throw Error(ErrorCode::NotRealizable, "adjacent angles sum to at least pi");
    }
    const double m = std::sin(alpha) * std::sin(beta) * sq(std::sinh(0.5 * c));
    // (1 - cos gamma)/2 and (1 + cos gamma)/2
    double s = sq(std::cos(0.5 * (alpha + beta))) - m;
    const double k = sq(std::sin(0.5 * (alpha + beta))) + m;
    if (s < -kClampTol * (s + k)) {
        throw Error(ErrorCode::NotRealizable,
                    "side too long for the adjacent angles; no third vertex");
    }
    s = std::max(s, 0.0);
    return 2.0 * std::atan2(std::sqrt(s), std::sqrt(k));
}

/// Side opposite beta (between the vertices carrying alpha and gamma), from three angles.
/// cosh b = (cos beta + cos alpha cos gamma) / (sin alpha sin gamma)
inline Length side_from_aaa(Angle alpha, Angle beta, Angle gamma)
{
    detail::require_angle(alpha, "angle alpha");
    detail::require_angle(beta, "angle beta");
    detail::require_angle(gamma, "angle gamma");
    const double sum = alpha + beta + gamma;
    if (sum >= kPi - kClampTol) {
        throw Error(ErrorCode::AngleSumNotHyperbolic, "angle sum is not below pi");
    }
    // sinh^2(b/2) = cos(sum/2) cos((alpha+gamma-beta)/2) / (sin alpha sin gamma)
    const double s = std::cos(0.5 * sum) * std::cos(0.5 * (alpha + gamma - beta)) /
                     (std::sin(alpha) * std::sin(gamma));
    return 2.0 * std::asinh(std::sqrt(std::max(s, 0.0)));
}

/// Angle opposite side c in the triangle whose sides a and c enclose beta.
///
/// Evaluated by solving the third side and then the SSS angle, which keeps the
/// obtuse branch that an arcsin form of the sine rule cannot see.
inline Angle angle_f(Length c, Angle beta, Length a)
{
    const Length b = side_from_sas(a, c, beta);
    return angle_from_sss(a, b, c);
}

/// Apex angle at B of the quadrilateral ABCD assembled along the diagonal AC.
///
/// Triangle ACD has angles beta2 (C), gamma (D), delta2 (A), which fixes AC;
/// triangle ABC then has angles beta1 at C and delta1 at A.
inline Angle angle_h(Angle beta1, Angle beta2, Angle gamma, Angle delta2, Angle delta1)
{
    return angle_psi(beta1, side_from_aaa(beta2, gamma, delta2), delta1);
}

/// Full solution of a triangle from two sides and the included angle.
inline Triangle solve_sas(Length a, Angle gamma, Length b)
{
    detail::require_length(a, "side a", false);
    detail::require_length(b, "side b", false);
    Triangle t;
    t.a = a;
    t.b = b;
    t.gamma = gamma;
    t.c = side_from_sas(a, b, gamma);
    // Four-part formula, so a tiny angle does not inherit the rounding of c:
    // cot alpha sin gamma = coth a sinh b - cosh b cos gamma.
    const double h = 2.0 * detail::sq(std::sin(0.5 * gamma));
    t.alpha = std::atan2(std::sinh(a) * std::sin(gamma),
                         std::sinh(b - a) + h * std::sinh(a) * std::cosh(b));
    t.beta = std::atan2(std::sinh(b) * std::sin(gamma),
                        std::sinh(a - b) + h * std::sinh(b) * std::cosh(a));
    return t;
}

/// Full solution of a triangle from its three angles.
inline Triangle solve_aaa(Angle alpha, Angle beta, Angle gamma)
{
    Triangle t;
    t.alpha = alpha;
    t.beta = beta;
    t.gamma = gamma;
    t.a = side_from_aaa(beta, alpha, gamma);
    t.b = side_from_aaa(alpha, beta, gamma);
    t.c = side_from_aaa(alpha, gamma, beta);
    return t;
}

/// Ordering of the third sides opposite gamma1 and gamma2 for fixed a, b.
/// Always agrees with the ordering of gamma1 against gamma2.
inline std::partial_ordering schmutz_compare(Length a, Length b, Angle gamma1, Angle gamma2)
{
    return side_from_sas(a, b, gamma1) <=> side_from_sas(a, b, gamma2);
}

/// Largest relative deviation among the three sine-rule ratios sinh(x)/sin(X).
inline double sine_rule_residual(const Triangle& t)
{
    const double ra = std::sinh(t.a) / std::sin(t.alpha);
    const double rb = std::sinh(t.b) / std::sin(t.beta);
    const double rc = std::sinh(t.c) / std::sin(t.gamma);
    const double hi = std::max({ra, rb, rc});
    const double lo = std::min({ra, rb, rc});
    return (hi - lo) / hi;
}

/// Relative residual of cosh c = cosh a cosh b - sinh a sinh b cos gamma.
inline double cosine_rule_residual(const Triangle& t)
{
    const double lhs = std::cosh(t.c);
    const double rhs = std::cosh(t.a) * std::cosh(t.b) -
                       std::sinh(t.a) * std::sinh(t.b) * std::cos(t.gamma);
    return std::abs(lhs - rhs) / lhs;
}

}  // namespace hypang
