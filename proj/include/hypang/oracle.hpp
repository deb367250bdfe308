#pragma once

// Brute-force verifiers. Everything here is built from coordinates with the
// embed primitives (frames, distance, angle_at); no closed-form triangle
// formula is called, so agreement with hyptrig is a genuine cross-check.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "hypang/embed.hpp"
#include "hypang/hyperelliptic.hpp"
#include "hypang/polygon.hpp"
#include "hypang/teich.hpp"

namespace hypang
{

struct OracleEntry {
    std::string quantity;
    double oracle{0};
    double closed_form{0};

    double abs_dev() const { return std::abs(oracle - closed_form); }
    double rel_dev() const
    {
        const double s = std::max(std::abs(oracle), std::abs(closed_form));
        return s > 0.0 ? abs_dev() / s : 0.0;
    }
};

/** @brief Append-only list of oracle comparisons */
class OracleReport
{
public:
    void add(std::string quantity, double oracle, double closed_form)
    {
        entries_.push_back({std::move(quantity), oracle, closed_form});
    }
    const std::vector<OracleEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    double max_abs_dev() const
    {
        double m = 0.0;
        for (const auto& e : entries_) {
            m = std::max(m, e.abs_dev());
        }
        return m;
    }
    double max_rel_dev() const
    {
        double m = 0.0;
        for (const auto& e : entries_) {
            m = std::max(m, e.rel_dev());
        }
        return m;
    }

private:
    std::vector<OracleEntry> entries_;
};

/// SAS triangle built in the half-plane: the gamma vertex at i, side a up the
/// imaginary axis, side b leaving i at angle gamma from it. Same labelling as
/// solve_sas (alpha opposite a, beta opposite b).
inline Triangle triangle_oracle(Length a, Angle gamma, Length b)
{
    const Complex c = kI;
    const Complex vb = translation_up(a).apply(kI);
    const Complex va = (rotation_about_i(gamma) * translation_up(b)).apply(kI);
    Triangle t;
    t.a = distance(c, vb);
    t.b = distance(c, va);
    t.c = distance(va, vb);
    t.gamma = angle_at(va, c, vb);
    t.alpha = angle_at(c, va, vb);
    t.beta = angle_at(c, vb, va);
    return t;
}

namespace detail
{

/// Euclidean picture of the hyperbolic circle about i*y0 of radius r.
struct AxisCircle {
    double center;
    double radius;
};

inline AxisCircle axis_circle(double y0, double r) { return {y0 * std::cosh(r), y0 * std::sinh(r)}; }

/// Points at hyperbolic distance r1 from i*y1 and r2 from i*y2, x >= 0 branch.
inline bool intersect_axis(double y1, double r1, double y2, double r2, Complex& out)
{
    const AxisCircle c1 = axis_circle(y1, r1), c2 = axis_circle(y2, r2);
    const double y = (c1.radius * c1.radius - c2.radius * c2.radius + c2.center * c2.center -
                      c1.center * c1.center) /
                     (2.0 * (c2.center - c1.center));
    const double x2 = c1.radius * c1.radius - (y - c1.center) * (y - c1.center);
    if (!(x2 > 0.0)) {
        return false;
    }
    out = {std::sqrt(x2), y};
    return true;
}

}  // namespace detail

/** @brief Grid scan result: best parameter, its residual, and monotonicity audit */
struct ScanResult {
    double argmin{0};
    double residual{std::numeric_limits<double>::infinity()};
    int samples{0};
    int monotonicity_violations{0};
};

/// Quadrilateral ABCD with sides AB, BC, CD, DA and diagonal AC = d, from
/// coordinates: A = i, C = i e^d, B right of the axis, D left of it.
inline bool quad_oracle(const std::array<Length, 4>& s, double d, QuadAngles& q)
{
    const double yc = std::exp(d);
    Complex b, dd;
    if (!detail::intersect_axis(1.0, s[0], yc, s[1], b) ||
        !detail::intersect_axis(1.0, s[3], yc, s[2], dd)) {
        return false;
    }
    dd = {-dd.real(), dd.imag()};
    const Complex a = kI, c{0.0, yc};
    q.sides = s;
    q.diag = d;
    q.alpha = angle_at(b, a, c) + angle_at(c, a, dd);
    q.beta = angle_at(a, b, c);
    q.gamma = angle_at(b, c, a) + angle_at(a, c, dd);
    q.delta = angle_at(c, dd, a);
    return true;
}

/// Dense scan of the four-side hinge. The residual is the worse of the angle
/// sum and alternating sum misfits; the audit counts grid steps where the
/// alternating sum fails to decrease.
inline ScanResult quad_scan_teich(const std::array<Length, 4>& s, double angle_sum, double alt_sum,
                                  int n = 100000)
{
    ScanResult r;
    const double lo = std::max(std::abs(s[0] - s[1]), std::abs(s[2] - s[3]));
    const double hi = std::min(s[0] + s[1], s[2] + s[3]);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k < n; ++k) {
        const double d = lo + (hi - lo) * k / n;
        QuadAngles q;
        if (!quad_oracle(s, d, q)) {
            continue;
        }
        ++r.samples;
        const double alt = q.alt_sum();
        if (alt >= prev) {
            ++r.monotonicity_violations;
        }
        prev = alt;
        const double res = std::max(std::abs(q.sum() - angle_sum), std::abs(alt - alt_sum));
        if (res < r.residual) {
            r.residual = res;
            r.argmin = d;
        }
    }
    return r;
}

/// Quadrilateral with A = i, C = i e^t and B, D placed from A by the two
/// hinge angles and sides. Angles are measured, not solved.
inline QuadAngles hinge_oracle(Length ab, Length ad, Angle bac, Angle cad, double t)
{
    const Complex a = kI, c = translation_up(t).apply(kI);
    const Complex b = (rotation_about_i(-bac) * translation_up(ab)).apply(kI);
    const Complex d = (rotation_about_i(cad) * translation_up(ad)).apply(kI);
    QuadAngles q;
    q.diag = t;
    q.alpha = bac + cad;
    q.beta = angle_at(a, b, c);
    q.gamma = angle_at(b, c, a) + angle_at(a, c, d);
    q.delta = angle_at(c, d, a);
    q.sides = {ab, distance(b, c), distance(c, d), ad};
    return q;
}

/// Dense scan of the angle-side hinge on [t_lo, t_hi]; the audit counts grid
/// steps where the three-angle sum fails to decrease.
inline ScanResult quad_scan_hinge(Length ab, Length ad, Angle bac, Angle cad, double three_sum,
                                  double t_lo, double t_hi, int n = 100000)
{
    ScanResult r;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= n; ++k) {
        const double t = t_lo + (t_hi - t_lo) * k / n;
        const QuadAngles q = hinge_oracle(ab, ad, bac, cad, t);
        ++r.samples;
        const double three = q.beta + q.gamma + q.delta;
        if (three >= prev) {
            ++r.monotonicity_violations;
        }
        prev = three;
        const double res = std::abs(three - three_sum);
        if (res < r.residual) {
            r.residual = res;
            r.argmin = t;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Test fleets

namespace detail
{

/// Free coordinates of a polygon family: a_1..a_{2g} and either all 4g angles
/// (generic) or alpha_1..alpha_{2g} (hyperelliptic, copied to the second half).
inline CanonicalPolygon assemble(int g, const Eigen::VectorXd& x, bool hyper)
{
    CanonicalPolygon p;
    p.genus = g;
    p.sides.assign(4 * g, 0.0);
    p.angles.assign(4 * g, 0.0);
    for (int i = 1; i <= 2 * g; ++i) {
        p.side(i) = p.side(i + 2 * g) = x[i - 1];
    }
    for (int i = 1; i <= 4 * g; ++i) {
        const int j = hyper ? (i - 1) % (2 * g) : i - 1;
        p.angle(i) = x[2 * g + j];
    }
    return p;
}

/// Frame reached by walking the boundary from Q_1 through Q_{last}; the full
/// walk (last = 4g + 1) gives the identity when the polygon closes.
inline Isometry walk_frame(const CanonicalPolygon& p, int last)
{
    Isometry frame = Isometry::identity();
    for (int k = 2; k <= last; ++k) {
        frame = frame * translation_up(p.side(k)) * rotation_about_i(-(kPi - p.angle(k)));
    }
    return frame;
}

/// Generic: closure (3), angle sum, alpha_1 = alpha_{2g+1}, alternating sum.
/// Hyperelliptic: the half walk must be a half-turn (trace 0) plus the angle
/// sum; closure of the full walk follows, and the other conditions hold by
/// the copy. Squaring the half walk would leave a rank-one Jacobian.
inline Eigen::VectorXd constraints(const CanonicalPolygon& p, bool hyper)
{
    const int g = p.genus;
    double sum = 0.0, alt = 0.0;
    for (int i = 1; i <= 4 * g; ++i) {
        sum += p.angle(i);
        alt += alternating_sign(i, g) * p.angle(i);
    }
    if (hyper) {
        Eigen::VectorXd f(2);
        const Isometry h = walk_frame(p, 2 * g + 1);
        f[0] = h.trace() / std::sqrt(std::norm(h.m11) + std::norm(h.m12) + std::norm(h.m21) +
                                     std::norm(h.m22));
        f[1] = sum - 2.0 * kPi;
        return f;
    }
    const Isometry w = walk_frame(p, 4 * g + 1).normalized();
    Eigen::VectorXd f(6);
    f[0] = w.m12;
    f[1] = w.m21;
    f[2] = 0.5 * (w.m11 - w.m22);
    f[3] = sum - 2.0 * kPi;
    f[4] = p.angle(1) - p.angle(2 * g + 1);
    f[5] = alt;
    return f;
}

inline Eigen::VectorXd coordinates(const CanonicalPolygon& p, bool hyper)
{
    const int g = p.genus;
    Eigen::VectorXd x(hyper ? 4 * g : 6 * g);
    for (int i = 1; i <= 2 * g; ++i) {
        x[i - 1] = p.side(i);
    }
    for (int j = 0; j < x.size() - 2 * g; ++j) {
        x[2 * g + j] = p.angles[j];
    }
    return x;
}

/// Min-norm Newton from x; false if it does not reach tol. Once tol is met a
/// few more steps are kept while they still lower the residual, since the
/// closure gap can exceed the constraint residual by a sizeable factor.
inline bool newton_project(int g, Eigen::VectorXd& x, bool hyper, double tol)
{
    const int dim = static_cast<int>(x.size());
    int polish = -1;
    Eigen::VectorXd best;
    double best_norm = 0.0;
    for (int it = 0; it < 60; ++it) {
        const Eigen::VectorXd f = constraints(assemble(g, x, hyper), hyper);
        if (!f.allFinite()) {
            return false;
        }
        if (polish < 0 && f.cwiseAbs().maxCoeff() <= tol) {
            polish = 0;
            best = x;
            best_norm = f.norm();
        } else if (polish >= 0) {
            if (f.norm() < best_norm) {
                best = x;
                best_norm = f.norm();
            }
            if (++polish == 3) {
                x = best;
                return true;
            }
        }
        Eigen::MatrixXd jac(f.size(), dim);
        for (int j = 0; j < dim; ++j) {
            const double h = 1e-7 * std::max(1.0, std::abs(x[j]));
            Eigen::VectorXd xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            jac.col(j) = (constraints(assemble(g, xp, hyper), hyper) -
                          constraints(assemble(g, xm, hyper), hyper)) /
                         (2.0 * h);
        }
        const Eigen::VectorXd step =
            jac.transpose() * (jac * jac.transpose()).ldlt().solve(f);
        const double norm = f.norm();
        double lambda = 1.0;
        while (lambda > 1e-4) {
            const Eigen::VectorXd ft = constraints(assemble(g, x - lambda * step, hyper), hyper);
            if (ft.allFinite() && ft.norm() < norm) {
                break;
            }
            lambda *= 0.5;
        }
        x -= lambda * step;
    }
    if (polish >= 0) {
        x = best;
        return true;
    }
    return false;
}

}  // namespace detail

/// Pulls a nearby polygon onto the canonical conditions (and equal opposite
/// angles and sides when hyper) by min-norm Newton steps, continued from the
/// regular polygon of the same genus in small stages. Throws ClosureFailure
/// when a stage does not converge or the result is not a valid polygon.
inline CanonicalPolygon project_canonical(const CanonicalPolygon& start, bool hyper,
                                          double tol = 1e-11)
{
    const int g = start.genus;
    const Eigen::VectorXd target = detail::coordinates(start, hyper);
    const Eigen::VectorXd origin = detail::coordinates(regular_polygon(g), hyper);
    constexpr int kStages = 8;
    Eigen::VectorXd x = origin;
    for (int s = 1; s <= kStages; ++s) {
        x += (target - origin) / kStages;
        if (!detail::newton_project(g, x, hyper, tol)) {
            throw Error(ErrorCode::ClosureFailure,
                        "projection onto canonical polygons did not converge");
        }
    }
    CanonicalPolygon p = detail::assemble(g, x, hyper);
    if (!validate_canonical(p, 1e-9).ok()) {
        throw Error(ErrorCode::ClosureFailure, "projection left the canonical conditions");
    }
    return p;
}

/// Random valid polygon near the regular one: sides and angles jittered by a
/// relative amount up to `spread`, then projected back.
inline CanonicalPolygon perturbed_polygon(int genus, double spread, std::mt19937_64& rng,
                                          bool hyper = false)
{
    std::uniform_real_distribution<double> u(-spread, spread);
    CanonicalPolygon p = regular_polygon(genus);
    for (int i = 1; i <= 2 * genus; ++i) {
        p.side(i) *= 1.0 + u(rng);
        p.side(i + 2 * genus) = p.side(i);
    }
    for (auto& a : p.angles) {
        a *= 1.0 + u(rng);
    }
    if (hyper) {
        for (int i = 1; i <= 2 * genus; ++i) {
            p.angle(i + 2 * genus) = p.angle(i);
        }
    }
    return project_canonical(p, hyper);
}

struct FleetSpec {
    std::vector<int> genera{2, 3, 4, 5};
    int perturbed_per_genus{25};
    double spread{0.02};
    int random_theta{1000};
    std::uint64_t seed{20261019};
};

/** @brief Aggregate outcome of the round-trip harness for one quantity */
struct HarnessLine {
    std::string quantity;
    int cases{0};
    int failures{0};
    double max_deviation{0};
};

namespace detail
{

inline HarnessLine& line(std::vector<HarnessLine>& lines, const std::string& name)
{
    for (auto& l : lines) {
        if (l.quantity == name) {
            return l;
        }
    }
    lines.push_back({name, 0, 0, 0.0});
    return lines.back();
}

inline void record(std::vector<HarnessLine>& lines, const std::string& name, bool ok,
                   double deviation)
{
    HarnessLine& l = line(lines, name);
    ++l.cases;
    l.failures += ok ? 0 : 1;
    if (std::isfinite(deviation)) {
        l.max_deviation = std::max(l.max_deviation, deviation);
    } else {
        l.max_deviation = std::numeric_limits<double>::infinity();
    }
}

}  // namespace detail

/// Runs both charts, validation, area and relation defect over a fleet of
/// regular and perturbed polygons, plus random-theta rejection. Failures are
/// recorded, never thrown.
inline std::vector<HarnessLine> roundtrip_harness(const FleetSpec& spec, double tol = 1e-7)
{
    std::vector<HarnessLine> out;
    std::mt19937_64 rng(spec.seed);
    for (int g : spec.genera) {
        const std::string gs = " g=" + std::to_string(g);
        std::vector<std::pair<CanonicalPolygon, bool>> fleet{{regular_polygon(g), true}};
        for (int k = 0; k < spec.perturbed_per_genus; ++k) {
            fleet.push_back({perturbed_polygon(g, spec.spread, rng, false), false});
            fleet.push_back({perturbed_polygon(g, spec.spread, rng, true), true});
        }
        for (const auto& [p, hyper] : fleet) {
            detail::record(out, "validate" + gs, validate_canonical(p).ok(), 0.0);
            try {
                const PlanePolygon pp = realize(p);
                const double area = polygon_area(pp);
                detail::record(out, "area" + gs, std::abs(area - 4 * kPi * (g - 1)) < 1e-8,
                               std::abs(area - 4 * kPi * (g - 1)));
                const double def = relation_defect(side_pairings(pp));
                detail::record(out, "relation_defect" + gs, def < 1e-6, def);
            } catch (const Error&) {
                detail::record(out, "area" + gs, false, INFINITY);
            }
            if (g >= 3) {
                double dev = INFINITY;
                try {
                    dev = polygon_deviation(p, reconstruct_teich(extract_theta(p)));
                } catch (const Error&) {
                }
                detail::record(out, "teich_roundtrip" + gs, dev <= tol, dev);
            }
            if (hyper) {
                double dev = INFINITY;
                try {
                    dev = polygon_deviation(p, reconstruct_hyperelliptic(extract_theta_h(p)));
                } catch (const Error&) {
                }
                detail::record(out, "hyper_roundtrip" + gs, dev <= tol, dev);
            }
        }
        if (g >= 3) {
            std::uniform_real_distribution<double> u(0.0, kPi);
            for (int k = 0; k < spec.random_theta / static_cast<int>(spec.genera.size()); ++k) {
                TeichParams t{g, std::vector<Angle>(TeichParams::size_for(g))};
                for (auto& x : t.theta) {
                    x = u(rng);
                }
                bool rejected = false;
                try {
                    reconstruct_teich(t);
                } catch (const Error& e) {
                    rejected = e.code() == ErrorCode::ImageConsistencyError ||
                               e.code() == ErrorCode::ParameterDomainError;
                }
                detail::record(out, "random_theta_rejected" + gs, rejected, 0.0);
            }
        }
    }
    return out;
}

}  // namespace hypang
