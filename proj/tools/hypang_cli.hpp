#pragma once

// Command-line front end. run() is the whole program minus process plumbing,
// so tests can drive it in-process.
//
// Exit codes: 0 success, 1 validation or consistency failure, 2 numerical
// failure, 3 I/O, parse or usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypang/hypang.hpp"
#include "hypang/oracle.hpp"

namespace hypang::cli
{

enum ExitCode { kOk = 0, kInvalid = 1, kNumerical = 2, kIo = 3 };

inline int exit_code(ErrorCode c)
{
    switch (c) {
        case ErrorCode::NoBracket:
        case ErrorCode::HingeNoBracket:
        case ErrorCode::ClosureFailure:
        case ErrorCode::MidpointMismatch:
            return kNumerical;
        case ErrorCode::MalformedInput:
        case ErrorCode::ModelMismatch:
            return kIo;
        default:
            return kInvalid;
    }
}

/** @brief Failure to read or write a file */
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** @brief Command finished but its verdict is negative; message already emitted */
struct Verdict {
    int code;
};

inline Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
}

/** @brief Shared state of one invocation */
struct Context {
    std::ostream& out;
    std::ostream& err;
    std::string output;  // empty: standard output
    double tol{0};

    void emit(const std::string& text) const
    {
        if (output.empty()) {
            out << text;
            return;
        }
        std::ofstream f(output, std::ios::binary);
        if (!f || !(f << text) || !f.flush()) {
            throw IoError("cannot write " + output);
        }
    }
    void emit(const Json& j) const { emit(j.dump(2) + "\n"); }
};

inline CanonicalPolygon load_polygon(const std::string& path)
{
    return polygon_from_json(read_json(path));
}

/// Conditions (i)-(v) failing is a validation verdict; a boundary that
/// satisfies them but does not close is a numerical ClosureFailure.
inline void report_failures(const Context& ctx, const ValidationReport& r)
{
    bool metric_ok = true;
    for (const auto& c : r.checks) {
        if (!c.pass) {
            ctx.err << "condition " << c.name << " fails, residual " << c.residual << "\n";
            metric_ok = metric_ok && c.name == "closure";
        }
    }
    if (!r.ok()) {
        throw Verdict{metric_ok ? kNumerical : kInvalid};
    }
}

inline ValidationReport require_valid(const Context& ctx, const CanonicalPolygon& p, double tol)
{
    const ValidationReport r = validate_canonical(p, tol);
    report_failures(ctx, r);
    return r;
}

inline void cmd_validate(const Context& ctx, const std::string& in)
{
    const CanonicalPolygon p = load_polygon(in);
    const ValidationReport r = validate_canonical(p, ctx.tol > 0 ? ctx.tol : kDefaultTol);
    ctx.emit(to_json(r));
    report_failures(ctx, r);
}

inline void cmd_extract(const Context& ctx, const std::string& in, const std::string& kind)
{
    const CanonicalPolygon p = load_polygon(in);
    require_valid(ctx, p, ctx.tol > 0 ? ctx.tol : kDefaultTol);
    ThetaDocument d;
    d.genus = p.genus;
    if (kind == "teich") {
        d.kind = ThetaKind::Teich;
        d.theta = extract_theta(p).theta;
    } else {
        d.kind = ThetaKind::Hyperelliptic;
        d.theta = extract_theta_h(p).theta;
    }
    ctx.emit(to_json(d));
}

inline void cmd_reconstruct(const Context& ctx, const std::string& in)
{
    const ThetaDocument d = theta_from_json(read_json(in));
    const CanonicalPolygon p = d.kind == ThetaKind::Teich
                                   ? reconstruct_teich(d.teich(), ctx.tol > 0 ? ctx.tol : kConsistencyTol)
                                   : reconstruct_hyperelliptic(d.hyper());
    ctx.emit(to_json(p));
}

inline PlanePolygon realize_checked(const Context& ctx, const CanonicalPolygon& p)
{
    require_valid(ctx, p, kDefaultTol);
    return realize(p, ctx.tol > 0 ? ctx.tol : kClosureTol);
}

inline void cmd_embed(const Context& ctx, const std::string& in, const std::string& model)
{
    const CanonicalPolygon p = load_polygon(in);
    PlanePolygon pp = realize_checked(ctx, p);
    if (model == "disk") {
        pp = to_disk(pp);
    }
    ctx.emit(to_json(pp));
}

inline void cmd_generators(const Context& ctx, const std::string& in)
{
    const CanonicalPolygon p = load_polygon(in);
    ctx.emit(generators_to_json(side_pairings(realize_checked(ctx, p))));
}

inline void cmd_render(const Context& ctx, const std::string& in, const RenderOptions& opt)
{
    const CanonicalPolygon p = load_polygon(in);
    const PlanePolygon pp = realize_checked(ctx, p);
    ctx.emit(render_svg(pp, opt, render_center(p, pp)));
}

inline void cmd_roundtrip(const Context& ctx, const std::string& in)
{
    const double tol = ctx.tol > 0 ? ctx.tol : 1e-7;
    const CanonicalPolygon p = load_polygon(in);
    require_valid(ctx, p, kDefaultTol);
    Json report = Json::object();
    bool ok = true;
    auto attempt = [&](const char* chart, auto&& rebuild) {
        try {
            const double dev = polygon_deviation(p, rebuild());
            report[chart] = {{"deviation", dev}, {"pass", dev <= tol}};
            ok = ok && dev <= tol;
        } catch (const Error& e) {
            report[chart] = {{"error", to_string(e.code())}, {"pass", false}};
            ctx.err << chart << ": " << e.what() << "\n";
            ok = false;
        }
    };
    if (p.genus >= 3) {
        attempt("teich", [&] { return reconstruct_teich(extract_theta(p)); });
    }
    if (is_hyperelliptic(p)) {
        attempt("hyperelliptic", [&] { return reconstruct_hyperelliptic(extract_theta_h(p)); });
    }
    report["tol"] = tol;
    ctx.emit(report);
    if (!ok) {
        throw Verdict{kInvalid};
    }
}

/// Triangle oracle agreement (relative, within tol), hinge monotonicity and
/// quadrilateral solver agreement on n random samples.
inline void cmd_oracle_sweep(const Context& ctx, int n, double tol)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> side(0.05, 5.0), ang(0.05, kPi - 0.05);
    OracleReport tri;
    for (int k = 0; k < n; ++k) {
        const double a = side(rng), b = side(rng), g = ang(rng);
        const Triangle o = triangle_oracle(a, g, b), c = solve_sas(a, g, b);
        tri.add("c", o.c, c.c);
        tri.add("alpha", o.alpha, c.alpha);
        tri.add("beta", o.beta, c.beta);
    }
    std::uniform_real_distribution<double> qs(0.5, 2.0), qa(0.3, 1.2), qt(0.3, 2.0);
    const int quads = std::max(1, std::min(n, 20));
    double quad_dev = 0.0, hinge_dev = 0.0;
    int violations = 0;
    for (int k = 0; k < quads; ++k) {
        const std::array<Length, 4> s{qs(rng), qs(rng), qs(rng), qs(rng)};
        const auto [lo, hi] = hinge_interval(s, 1e-3);
        if (lo < hi) {
            const QuadAngles q = quad_from_diagonal(s, 0.5 * (lo + hi));
            const ScanResult r = quad_scan_teich(s, q.sum(), q.alt_sum(), 10000);
            quad_dev = std::max(quad_dev, std::abs(r.argmin - solve_quad_teich(s, q.sum(), q.alt_sum()).diag));
            violations += r.monotonicity_violations;
        }
        const double ab = qs(rng), ad = qs(rng), bac = qa(rng), cad = qa(rng), t = qt(rng);
        const QuadAngles h = hinge_oracle(ab, ad, bac, cad, t);
        const double three = h.beta + h.gamma + h.delta;
        const ScanResult r = quad_scan_hinge(ab, ad, bac, cad, three, 1e-6, 3.0 * t, 10000);
        hinge_dev = std::max(hinge_dev, std::abs(r.argmin - solve_quad_hinge(ab, ad, bac, cad, three).diag));
        violations += r.monotonicity_violations;
    }
    const bool ok = tri.max_rel_dev() < tol && violations == 0 && quad_dev < 1e-3 && hinge_dev < 1e-3;
    ctx.emit(Json{{"triangles", n},
                  {"triangle_max_rel_dev", tri.max_rel_dev()},
                  {"quadrilaterals", quads},
                  {"quad_diag_max_dev", quad_dev},
                  {"hinge_t_max_dev", hinge_dev},
                  {"monotonicity_violations", violations},
                  {"pass", ok}});
    if (!ok) {
        throw Verdict{kInvalid};
    }
}

inline int run(const std::vector<std::string>& argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr)
{
    CLI::App app{"Angle coordinates of canonical hyperbolic polygons", "hypang"};
    app.require_subcommand(1);
    std::string input, output, kind, model = "disk";
    double tol = 0.0;
    int n = 1000;
    RenderOptions ropt;

    auto tol_opt = [&](CLI::App* c) {
        c->add_option("--tol", tol, "tolerance override")->check(CLI::PositiveNumber);
    };
    auto out_opt = [&](CLI::App* c) { c->add_option("-o,--output", output, "output file"); };
    auto in_opt = [&](CLI::App* c, const char* what) {
        c->add_option("input", input, what)->required();
    };

    CLI::App* validate = app.add_subcommand("validate", "check the canonical conditions");
    in_opt(validate, "polygon JSON");
    out_opt(validate);
    tol_opt(validate);

    CLI::App* extract = app.add_subcommand("extract", "angle coordinates of a polygon");
    in_opt(extract, "polygon JSON");
    extract->add_option("--kind", kind, "chart")->required()->check(CLI::IsMember({"teich", "hyper"}));
    out_opt(extract);
    tol_opt(extract);

    CLI::App* reconstruct = app.add_subcommand("reconstruct", "polygon from angle coordinates");
    in_opt(reconstruct, "theta JSON");
    out_opt(reconstruct);
    tol_opt(reconstruct);

    CLI::App* embed = app.add_subcommand("embed", "vertex coordinates");
    in_opt(embed, "polygon JSON");
    embed->add_option("--model", model, "disk or halfplane")
        ->check(CLI::IsMember({"disk", "halfplane"}))
        ->default_str("halfplane");
    out_opt(embed);
    tol_opt(embed);

    CLI::App* generators = app.add_subcommand("generators", "side-pairing isometries");
    in_opt(generators, "polygon JSON");
    out_opt(generators);
    tol_opt(generators);

    CLI::App* render = app.add_subcommand("render", "SVG picture");
    in_opt(render, "polygon JSON");
    render->add_option("--model", model, "disk or halfplane")
        ->check(CLI::IsMember({"disk", "halfplane"}));
    render->add_option("--size", ropt.size, "pixels")->check(CLI::Range(16, 20000));
    render->add_option("--stroke", ropt.stroke, "stroke width")->check(CLI::PositiveNumber);
    out_opt(render);
    tol_opt(render);

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "extract and reconstruct both charts");
    in_opt(roundtrip, "polygon JSON");
    out_opt(roundtrip);
    tol_opt(roundtrip);

    CLI::App* sweep = app.add_subcommand("oracle-sweep", "compare closed forms with coordinate oracles");
    sweep->add_option("--n", n, "random samples")->check(CLI::Range(1, 10000000));
    out_opt(sweep);
    tol_opt(sweep);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kIo;
    }

    Context ctx{out, err, output, tol};
    try {
        if (validate->parsed()) {
            cmd_validate(ctx, input);
        } else if (extract->parsed()) {
            cmd_extract(ctx, input, kind);
        } else if (reconstruct->parsed()) {
            cmd_reconstruct(ctx, input);
        } else if (embed->parsed()) {
            if (embed->count("--model") == 0) {
                model = "halfplane";
            }
            cmd_embed(ctx, input, model);
        } else if (generators->parsed()) {
            cmd_generators(ctx, input);
        } else if (render->parsed()) {
            ropt.model = model == "disk" ? Model::Disk : Model::HalfPlane;
            cmd_render(ctx, input, ropt);
        } else if (roundtrip->parsed()) {
            cmd_roundtrip(ctx, input);
        } else if (sweep->parsed()) {
            cmd_oracle_sweep(ctx, n, tol > 0 ? tol : 1e-9);
        }
    } catch (const Verdict& v) {
        return v.code;
    } catch (const IoError& e) {
        err << e.what() << "\n";
        return kIo;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kNumerical;
    }
    return kOk;
}

}  // namespace hypang::cli
