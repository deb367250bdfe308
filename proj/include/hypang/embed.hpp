#pragma once

// Coordinates for canonical polygons in the upper half-plane, side-pairing
// isometries and the checks that go with them.
//
// Isometries act by Moebius transformations of unit-determinant real
// matrices. A "frame" is an isometry F read as the point F(i) together with
// the unit tangent F_*(up); moving and turning a frame is right
// multiplication by translation_up / rotation_about_i.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "hypang/canonical_polygon.hpp"
#include "hypang/errors.hpp"

namespace hypang
{

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

enum class Model { HalfPlane, Disk };

inline const char* to_string(Model m) { return m == Model::HalfPlane ? "halfplane" : "disk"; }

/** @brief Point of the hyperbolic plane in one of the two supported models */
struct PlanePoint {
    Model model{Model::HalfPlane};
    double x{0};
    double y{1};

    Complex z() const { return {x, y}; }
    static PlanePoint halfplane(Complex z) { return {Model::HalfPlane, z.real(), z.imag()}; }
    static PlanePoint disk(Complex z) { return {Model::Disk, z.real(), z.imag()}; }
};

/** @brief Orientation-preserving isometry, an SL(2,R) matrix modulo sign */
struct Isometry {
    double m11{1}, m12{0}, m21{0}, m22{1};

    static Isometry identity() { return {}; }

    Complex apply(Complex z) const { return (m11 * z + m12) / (m21 * z + m22); }
    double determinant() const { return m11 * m22 - m12 * m21; }
    double trace() const { return m11 + m22; }
    Isometry inverse() const { return {m22, -m12, -m21, m11}; }

    /// Representative of the class of +-A with trace >= 0 (m12 >= 0 when the trace vanishes).
    Isometry normalized() const
    {
        const double t = trace();
        bool flip = t < 0.0;
        if (std::abs(t) <= 1e-12) {
            flip = m12 < 0.0 || (m12 == 0.0 && m21 < 0.0);
        }
        return flip ? Isometry{-m11, -m12, -m21, -m22} : *this;
    }

    friend Isometry operator*(const Isometry& a, const Isometry& b)
    {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }
};

/// Frobenius distance between the sign-normalized representatives.
inline double frobenius_distance(const Isometry& a, const Isometry& b)
{
    const Isometry x = a.normalized();
    const Isometry y = b.normalized();
    return std::sqrt(detail::sq(x.m11 - y.m11) + detail::sq(x.m12 - y.m12) +
                     detail::sq(x.m21 - y.m21) + detail::sq(x.m22 - y.m22));
}

/// z -> e^d z: moves i a distance d up the imaginary axis.
inline Isometry translation_up(double d)
{
    const double e = std::exp(0.5 * d);
    return {e, 0.0, 0.0, 1.0 / e};
}

/// Rotation about i, counterclockwise by theta.
inline Isometry rotation_about_i(double theta)
{
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    return {c, s, -s, c};
}

/// z -> (z - x)/y, sending p to i without rotating tangent directions.
inline Isometry to_base(Complex p)
{
    const double r = std::sqrt(p.imag());
    return {1.0 / r, -p.real() / r, 0.0, r};
}

/// Cayley map from the half-plane to the disk, i -> 0.
inline Complex cayley(Complex z) { return (z - kI) / (z + kI); }
inline Complex inverse_cayley(Complex w) { return kI * (1.0 + w) / (1.0 - w); }

/// Direction of the geodesic from i toward w, counterclockwise from "up".
inline double heading_at_base(Complex w) { return std::arg(cayley(w)); }

/// Frame F with F(i) = p whose heading points along the geodesic toward q.
inline Isometry frame_at(Complex p, Complex q)
{
    const Isometry t = to_base(p);
    const double h = heading_at_base(t.apply(q));
    return t.inverse() * rotation_about_i(h);
}

inline Complex as_halfplane(const PlanePoint& p)
{
    return p.model == Model::HalfPlane ? p.z() : inverse_cayley(p.z());
}

/// Hyperbolic distance; both points must use the same model.
inline Length distance(const PlanePoint& p, const PlanePoint& q)
{
    if (p.model != q.model) {
        throw Error(ErrorCode::ModelMismatch, "points live in different models");
    }
    const double e = std::abs(p.z() - q.z());
    if (p.model == Model::HalfPlane) {
        return 2.0 * std::asinh(e / (2.0 * std::sqrt(p.y * q.y)));
    }
    const double dp = 1.0 - std::norm(p.z());
    const double dq = 1.0 - std::norm(q.z());
    return 2.0 * std::asinh(e / std::sqrt(dp * dq));
}

inline Length distance(Complex z, Complex w)
{
    return distance(PlanePoint::halfplane(z), PlanePoint::halfplane(w));
}

/// Unsigned angle at q between the geodesics toward p and r, in [0, pi].
inline Angle angle_at(Complex p, Complex q, Complex r)
{
    const Isometry t = to_base(q);
    const double d = heading_at_base(t.apply(p)) - heading_at_base(t.apply(r));
    return std::abs(std::remainder(d, 2.0 * kPi));
}

inline Angle angle_at(const PlanePoint& p, const PlanePoint& q, const PlanePoint& r)
{
    if (p.model != q.model || q.model != r.model) {
        throw Error(ErrorCode::ModelMismatch, "points live in different models");
    }
    return angle_at(as_halfplane(p), as_halfplane(q), as_halfplane(r));
}

/// Geodesic midpoint of p and q.
inline Complex midpoint(Complex p, Complex q)
{
    return frame_at(p, q).apply(kI * std::exp(0.5 * distance(p, q)));
}

/// Point reflection (rotation by pi) about c.
inline Isometry half_turn(Complex c)
{
    const Isometry t = to_base(c);
    return t.inverse() * rotation_about_i(kPi) * t;
}

/** @brief Realized polygon; vertices[k-1] holds Q_k */
struct PlanePolygon {
    int genus{0};
    Model model{Model::HalfPlane};
    std::vector<PlanePoint> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
    const PlanePoint& vertex(int k) const
    {
        const int n = size();
        return vertices[((k - 1) % n + n) % n];
    }
    Complex q(int k) const { return as_halfplane(vertex(k)); }
};

/** @brief How far the boundary walk of a polygon misses closing up */
struct ClosureGap {
    Complex endpoint{kI};  ///< where the walk returns; i when closed
    double heading{0};     ///< signed heading mismatch at the return point
    double position() const { return distance(endpoint, kI); }
    double magnitude() const { return std::max(position(), std::abs(heading)); }
};

/// Walk the boundary: start at Q_1 = i heading up along a_2, advance by each
/// side and turn clockwise by the exterior angle pi - alpha_k at Q_k.
/// Vertices are written to `out` (Q_1..Q_{4g}) when given.
inline ClosureGap boundary_walk(const CanonicalPolygon& p, std::vector<Complex>* out = nullptr)
{
    const int n = p.size();
    if (out) {
        out->assign(n, kI);
    }
    Isometry frame = Isometry::identity();
    for (int step = 0; step < n; ++step) {
        const int k = step + 2;  // 2, 3, ..., n, n+1 (== 1)
        frame = frame * translation_up(p.side(k));
        if (out) {
            (*out)[p.wrap(k)] = frame.apply(kI);
        }
        frame = frame * rotation_about_i(-(kPi - p.angle(k)));
    }
    ClosureGap gap;
    gap.endpoint = frame.apply(kI);
    const Isometry rot = to_base(gap.endpoint) * frame;
    gap.heading = std::remainder(2.0 * std::atan2(rot.m12, rot.m11), 2.0 * kPi);
    return gap;
}

/// Default closure tolerance used by realize and validation.
constexpr double kClosureTol = 1e-9;

/// Coordinates of the polygon in the half-plane with Q_1 = i and a_2 leaving
/// Q_1 straight up. Throws ClosureFailure when the walk misses by more than tol.
inline PlanePolygon realize(const CanonicalPolygon& p, double tol = kClosureTol)
{
    p.check_shape();
    std::vector<Complex> pts;
    const ClosureGap gap = boundary_walk(p, &pts);
    if (!(gap.magnitude() <= tol)) {
        throw Error(ErrorCode::ClosureFailure,
                    "boundary does not close, gap " + std::to_string(gap.magnitude()));
    }
    PlanePolygon pp;
    pp.genus = p.genus;
    pp.model = Model::HalfPlane;
    // The walk ends on Q_1 itself; keep the anchor exact.
    pts[0] = kI;
    for (const Complex& z : pts) {
        pp.vertices.push_back(PlanePoint::halfplane(z));
    }
    return pp;
}

/// Side lengths and interior angles measured back from coordinates.
inline CanonicalPolygon measure(const PlanePolygon& pp)
{
    CanonicalPolygon p;
    p.genus = pp.genus;
    const int n = pp.size();
    for (int k = 1; k <= n; ++k) {
        p.sides.push_back(distance(pp.q(k - 1), pp.q(k)));
        p.angles.push_back(angle_at(pp.q(k - 1), pp.q(k), pp.q(k + 1)));
    }
    return p;
}

/// Side pairings gamma_1..gamma_{2g}: gamma_i carries a_i onto a_{i+2g} for odd
/// i and a_{i+2g} onto a_i for even i, sending the polygon across the target side.
inline std::vector<Isometry> side_pairings(const PlanePolygon& pp)
{
    const int g = pp.genus;
    std::vector<Isometry> gens;
    for (int i = 1; i <= 2 * g; ++i) {
        const Complex s0 = pp.q(i - 1), s1 = pp.q(i);
        const Complex t0 = pp.q(i + 2 * g), t1 = pp.q(i + 2 * g - 1);
        if (distance(s0, s1) < 1e-12 || distance(t0, t1) < 1e-12) {
            throw Error(ErrorCode::DegenerateSide, "side " + std::to_string(i) + " is degenerate");
        }
        // Q_{i-1} -> Q_{i+2g}, Q_i -> Q_{i+2g-1}: boundary orientation reverses.
        const Isometry a = frame_at(t0, t1) * frame_at(s0, s1).inverse();
        gens.push_back(i % 2 == 1 ? a.normalized() : a.inverse().normalized());
    }
    return gens;
}

/// Distance of gamma_1 ... gamma_{2g} gamma_1^-1 ... gamma_{2g}^-1 from the identity.
inline double relation_defect(const std::vector<Isometry>& gens)
{
    Isometry prod = Isometry::identity();
    for (const auto& g : gens) {
        prod = prod * g;
    }
    for (const auto& g : gens) {
        prod = prod * g.inverse();
    }
    return frobenius_distance(prod, Isometry::identity());
}

enum class IsometryClass { Identity, Elliptic, Parabolic, Hyperbolic };

inline const char* to_string(IsometryClass c)
{
    switch (c) {
        case IsometryClass::Identity: return "identity";
        case IsometryClass::Elliptic: return "elliptic";
        case IsometryClass::Parabolic: return "parabolic";
        case IsometryClass::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

inline IsometryClass classify(const Isometry& t)
{
    if (frobenius_distance(t, Isometry::identity()) <= 1e-9) {
        return IsometryClass::Identity;
    }
    const double tr = std::abs(t.trace());
    if (std::abs(tr - 2.0) <= 1e-9) {
        return IsometryClass::Parabolic;
    }
    return tr < 2.0 ? IsometryClass::Elliptic : IsometryClass::Hyperbolic;
}

/// Gauss-Bonnet area (n - 2) pi minus the measured angle sum.
inline double polygon_area(const PlanePolygon& pp)
{
    const int n = pp.size();
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) {
        sum += angle_at(pp.q(k - 1), pp.q(k), pp.q(k + 1));
    }
    return (n - 2) * kPi - sum;
}

/// Strict interior test for a convex polygon, done in the Klein model where
/// geodesics are straight chords.
inline bool contains(const PlanePolygon& pp, Complex z)
{
    auto klein = [](Complex h) {
        const Complex w = cayley(h);
        return 2.0 * w / (1.0 + std::norm(w));
    };
    auto cross = [](Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); };
    const int n = pp.size();
    std::vector<Complex> k(n);
    for (int i = 0; i < n; ++i) {
        k[i] = klein(pp.q(i + 1));
    }
    double orient = 0.0;
    for (int i = 0; i < n; ++i) {
        orient += cross(k[i], k[(i + 1) % n]);
    }
    const Complex x = klein(z);
    for (int i = 0; i < n; ++i) {
        const double c = cross(k[(i + 1) % n] - k[i], x - k[i]);
        if (c * orient <= 0.0) {
            return false;
        }
    }
    return true;
}

/// Same polygon in the disk model, with `center` sent to the origin.
inline PlanePolygon to_disk(const PlanePolygon& pp, Complex center = kI)
{
    PlanePolygon out;
    out.genus = pp.genus;
    out.model = Model::Disk;
    const Isometry t = to_base(center);
    for (int k = 1; k <= pp.size(); ++k) {
        out.vertices.push_back(PlanePoint::disk(cayley(t.apply(pp.q(k)))));
    }
    return out;
}

}  // namespace hypang
