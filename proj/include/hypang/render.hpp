#pragma once

// Static SVG figures of realized polygons. Sides are drawn as geodesics:
// arcs orthogonal to the unit circle in the disk, semicircles on the real
// axis in the half-plane.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hypang/embed.hpp"
#include "hypang/polygon.hpp"

namespace hypang
{

struct RenderOptions {
    Model model{Model::Disk};
    int size{600};        ///< width and height in px
    double stroke{1.5};   ///< side stroke width in px
    bool labels{true};
};

/// Radius above which a geodesic circle is drawn as a straight segment.
constexpr double kStraightRadius = 1e6;

/// Point sent to the figure's center: O for hyperelliptic polygons, otherwise
/// the preimage of the Euclidean centroid of the disk picture.
inline Complex render_center(const CanonicalPolygon& p, const PlanePolygon& pp)
{
    const int g = pp.genus;
    if (is_hyperelliptic(p, 1e-9)) {
        return midpoint(pp.q(1), pp.q(2 * g + 1));
    }
    Complex c{0.0, 0.0};
    for (int k = 1; k <= pp.size(); ++k) {
        c += cayley(pp.q(k));
    }
    c /= static_cast<double>(pp.size());
    return inverse_cayley(c);
}

namespace detail
{

inline std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x == 0.0 ? 0.0 : x);
    return buf;
}

struct Screen {
    double scale, ox, oy;
    Complex to(Complex z) const { return {ox + scale * z.real(), oy - scale * z.imag()}; }
};

/// SVG path command drawing the side from a to b (screen coordinates) on the
/// circle with screen center c and radius r, or a straight line.
inline std::string side_path(Complex a, Complex b, bool straight, Complex c, double r)
{
    std::string s = "M " + fmt(a.real()) + " " + fmt(a.imag()) + " ";
    if (straight) {
        return s + "L " + fmt(b.real()) + " " + fmt(b.imag());
    }
    const Complex d = b - a;
    const double cross = d.real() * (c.imag() - a.imag()) - d.imag() * (c.real() - a.real());
    const int sweep = cross > 0.0 ? 1 : 0;
    return s + "A " + fmt(r) + " " + fmt(r) + " 0 0 " + std::to_string(sweep) + " " +
           fmt(b.real()) + " " + fmt(b.imag());
}

/// Center and radius of the circle through u and v orthogonal to the unit circle.
inline bool orthogonal_circle(Complex u, Complex v, Complex& c, double& r)
{
    // Re(c conj(u)) = (1 + |u|^2) / 2, same for v.
    const double a11 = u.real(), a12 = u.imag(), a21 = v.real(), a22 = v.imag();
    const double b1 = 0.5 * (1.0 + std::norm(u)), b2 = 0.5 * (1.0 + std::norm(v));
    const double det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-15) {
        return false;
    }
    c = {(b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det};
    r = std::sqrt(std::max(0.0, std::norm(c) - 1.0));
    return r <= kStraightRadius;
}

}  // namespace detail

/// SVG document for a realized polygon. In the disk model the polygon is
/// first moved so that `center` sits at the origin.
inline std::string render_svg(const PlanePolygon& pp, const RenderOptions& opt, Complex center = kI)
{
    using detail::fmt;
    const double size = opt.size;
    const int n = pp.size();
    std::vector<Complex> pts;
    detail::Screen scr{};
    std::string body;

    if (opt.model == Model::Disk) {
        const PlanePolygon disk = to_disk(pp, center);
        for (const auto& v : disk.vertices) {
            pts.push_back(v.z());
        }
        scr = {0.45 * size, 0.5 * size, 0.5 * size};
        body += "<circle cx=\"" + fmt(scr.ox) + "\" cy=\"" + fmt(scr.oy) + "\" r=\"" +
                fmt(scr.scale) + "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
        for (int k = 1; k <= n; ++k) {
            const Complex u = pts[(k - 2 + n) % n], v = pts[k - 1];
            Complex c;
            double r = 0.0;
            const bool arc = detail::orthogonal_circle(u, v, c, r);
            body += "<path d=\"" +
                    detail::side_path(scr.to(u), scr.to(v), !arc, scr.to(c), r * scr.scale) +
                    "\"/>\n";
        }
    } else {
        for (int k = 1; k <= n; ++k) {
            pts.push_back(pp.q(k));
        }
        double xmin = pts[0].real(), xmax = xmin, ymax = pts[0].imag();
        for (const Complex& z : pts) {
            xmin = std::min(xmin, z.real());
            xmax = std::max(xmax, z.real());
            ymax = std::max(ymax, z.imag());
        }
        const double span = std::max(xmax - xmin, ymax) * 1.1;
        const double scale = 0.9 * size / span;
        scr = {scale, 0.5 * size - scale * 0.5 * (xmin + xmax), 0.95 * size};
        body += "<line x1=\"0.000000\" y1=\"" + fmt(scr.oy) + "\" x2=\"" + fmt(size) + "\" y2=\"" +
                fmt(scr.oy) + "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
        for (int k = 1; k <= n; ++k) {
            const Complex u = pts[(k - 2 + n) % n], v = pts[k - 1];
            const double dx = u.real() - v.real();
            bool straight = std::abs(dx) < 1e-12 * std::max(1.0, std::abs(u.real()));
            Complex c;
            double r = 0.0;
            if (!straight) {
                const double x0 = (std::norm(u) - std::norm(v)) / (2.0 * dx);
                c = {x0, 0.0};
                r = std::abs(u - c);
                straight = r > kStraightRadius;
            }
            body += "<path d=\"" +
                    detail::side_path(scr.to(u), scr.to(v), straight, scr.to(c), r * scr.scale) +
                    "\"/>\n";
        }
    }

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(opt.size) + "\" height=\"" + std::to_string(opt.size) +
           "\" viewBox=\"0 0 " + std::to_string(opt.size) + " " + std::to_string(opt.size) +
           "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<g fill=\"none\" stroke=\"black\" stroke-width=\"" + fmt(opt.stroke) + "\">\n";
    // The frame circle or axis goes first and keeps its own stroke.
    svg += body;
    svg += "</g>\n";
    if (opt.labels) {
        svg += "<g font-family=\"serif\" font-size=\"" + fmt(size / 40.0) + "\" fill=\"#1f3a93\">\n";
        for (int k = 1; k <= n; ++k) {
            const Complex s = scr.to(pts[k - 1]);
            svg += "<circle cx=\"" + fmt(s.real()) + "\" cy=\"" + fmt(s.imag()) + "\" r=\"" +
                   fmt(0.6 * opt.stroke + 1.0) + "\"/>\n";
            svg += "<text x=\"" + fmt(s.real() + 4.0) + "\" y=\"" + fmt(s.imag() - 4.0) +
                   "\">Q<tspan baseline-shift=\"sub\" font-size=\"70%\">" + std::to_string(k) +
                   "</tspan></text>\n";
        }
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace hypang
