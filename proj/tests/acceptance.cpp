// One process per criterion: `acceptance N` prints a single verdict line and
// exits nonzero when the criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "hypang_cli.hpp"

using namespace hypang;

namespace
{

struct Verdict {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

/// Same test as equivalent(p, q, 1e-7), kept as a number for the report.
bool equivalent_ok(double dev) { return dev <= 1e-7; }

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... xs)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, xs...);
    return buf;
}

/// Regular polygon plus `per_genus` perturbed ones for each genus.
std::vector<CanonicalPolygon> fleet(int g, int per_genus, bool hyper, std::uint64_t seed)
{
    std::mt19937_64 rng(seed + g);
    std::vector<CanonicalPolygon> out{regular_polygon(g)};
    for (int k = 0; k < per_genus; ++k) {
        out.push_back(perturbed_polygon(g, 0.02, rng, hyper));
    }
    return out;
}

Verdict trig_suite()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> side(0.05, 5.0), ang(1e-3, kPi - 1e-3);
    double sine = 0.0, cosine = 0.0;
    OracleReport rep;
    for (int k = 0; k < 10000; ++k) {
        const double a = side(rng), b = side(rng), g = ang(rng);
        const Triangle t = solve_sas(a, g, b);
        sine = std::max(sine, sine_rule_residual(t));
        cosine = std::max(cosine, cosine_rule_residual(t));
        const Triangle o = triangle_oracle(a, g, b);
        rep.add("c", o.c, t.c);
        rep.add("alpha", o.alpha, t.alpha);
        rep.add("beta", o.beta, t.beta);
    }
    const double secs = seconds_since(t0);
    return {sine < 1e-9 && cosine < 1e-9 && rep.max_rel_dev() < 1e-9 && secs < 5.0,
            fmt("10000 triangles, sine %.2e cosine %.2e oracle %.2e, %.2f s", sine, cosine,
                rep.max_rel_dev(), secs)};
}

Verdict schmutz()
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> side(0.05, 5.0);
    long violations = 0;
    for (int k = 0; k < 1000; ++k) {
        const double a = side(rng), b = side(rng);
        double prev = 0.0;
        for (int j = 1; j <= 1000; ++j) {
            const double c = side_from_sas(a, b, kPi * j / 1001.0);
            violations += c > prev ? 0 : 1;
            violations += j > 1 && schmutz_compare(a, b, kPi * (j - 1) / 1001.0, kPi * j / 1001.0) !=
                                       std::partial_ordering::less;
            prev = c;
        }
    }
    return {violations == 0, fmt("1000 pairs x 1000 angles, %ld violations", violations)};
}

Verdict teich_roundtrip()
{
    const auto t0 = Clock::now();
    int cases = 0, fails = 0;
    std::string per;
    for (int g = 3; g <= 5; ++g) {
        int gf = 0;
        double worst = 0.0;
        for (const auto& p : fleet(g, 33, false, 300)) {
            ++cases;
            double dev = INFINITY;
            try {
                const CanonicalPolygon q = reconstruct_teich(extract_theta(p));
                dev = polygon_deviation(p, q);
            } catch (const Error&) {
            }
            worst = std::max(worst, dev);
            gf += equivalent_ok(dev) ? 0 : 1;
        }
        fails += gf;
        per += fmt(" g=%d: %d/34 fail, worst %.1e;", g, gf, worst);
    }
    const double secs = seconds_since(t0);
    return {fails == 0 && secs < 30.0, fmt("%d cases, %d failures,", cases, fails) + per +
                                           fmt(" %.1f s", secs)};
}

Verdict codimension()
{
    std::mt19937_64 rng(4);
    int teich_total = 0, teich_rejected = 0;
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int k = 0; k < 1000; ++k) {
        const int g = 3 + k % 3;
        TeichParams t{g, std::vector<Angle>(TeichParams::size_for(g))};
        for (auto& x : t.theta) {
            x = u(rng);
        }
        ++teich_total;
        try {
            reconstruct_teich(t);
        } catch (const Error& e) {
            teich_rejected += e.code() == ErrorCode::ImageConsistencyError ||
                              e.code() == ErrorCode::ParameterDomainError;
        }
    }
    std::map<int, std::pair<int, int>> hyper;  // genus -> (ok, total)
    std::uniform_real_distribution<double> d(-1e-3, 1e-3);
    for (int g = 2; g <= 5; ++g) {
        const auto base = fleet(g, 9, true, 400);
        for (int k = 0; k < 250; ++k) {
            HyperParams h = extract_theta_h(base[k % base.size()]);
            for (auto& x : h.theta) {
                x = std::clamp(x + d(rng), 1e-9, kPi - 1e-9);
            }
            auto& [ok, total] = hyper[g];
            ++total;
            try {
                const CanonicalPolygon q = reconstruct_hyperelliptic(h);
                ok += is_hyperelliptic(q, 0.0) ? 1 : 0;
            } catch (const Error&) {
            }
        }
    }
    int hyper_ok = 0, hyper_total = 0;
    std::string per;
    for (const auto& [g, r] : hyper) {
        hyper_ok += r.first;
        hyper_total += r.second;
        per += fmt(" g=%d %d/%d;", g, r.first, r.second);
    }
    const double teich_rate = double(teich_rejected) / teich_total;
    const double hyper_rate = double(hyper_ok) / hyper_total;
    return {teich_rate >= 0.99 && hyper_rate >= 0.99,
            fmt("random teich theta rejected %.1f%%, perturbed hyperelliptic theta rebuilt %.1f%%",
                100 * teich_rate, 100 * hyper_rate) +
                " (" + per + " )"};
}

Verdict hyper_roundtrip()
{
    int cases = 0, fails = 0, asym = 0;
    std::string per;
    for (int g = 2; g <= 5; ++g) {
        int gf = 0;
        double worst = 0.0;
        for (const auto& p : fleet(g, 100, true, 500)) {
            ++cases;
            double dev = INFINITY;
            try {
                const CanonicalPolygon q = reconstruct_hyperelliptic(extract_theta_h(p));
                asym += is_hyperelliptic(q, 0.0) ? 0 : 1;
                dev = polygon_deviation(p, q);
            } catch (const Error&) {
            }
            worst = std::max(worst, dev);
            gf += equivalent_ok(dev) ? 0 : 1;
        }
        fails += gf;
        per += fmt(" g=%d: %d/101 fail, worst %.1e;", g, gf, worst);
    }
    return {fails == 0 && asym == 0,
            fmt("%d cases, %d failures, %d asymmetric,", cases, fails, asym) + per};
}

/// All fleet polygons used by the realization criteria.
std::vector<CanonicalPolygon> realization_fleet()
{
    std::vector<CanonicalPolygon> all;
    for (int g = 2; g <= 5; ++g) {
        for (bool hyper : {false, true}) {
            for (auto& p : fleet(g, 12, hyper, hyper ? 600 : 700)) {
                all.push_back(std::move(p));
            }
        }
    }
    return all;
}

Verdict gauss_bonnet()
{
    double worst = 0.0;
    const auto all = realization_fleet();
    for (const auto& p : all) {
        worst = std::max(worst, std::abs(polygon_area(realize(p)) - 4 * kPi * (p.genus - 1)));
    }
    return {worst < 1e-8, fmt("%zu polygons, max area error %.2e", all.size(), worst)};
}

Verdict fuchsian()
{
    double worst = 0.0, min_trace = INFINITY;
    int non_hyperbolic = 0;
    const auto all = realization_fleet();
    for (const auto& p : all) {
        const auto gens = side_pairings(realize(p));
        for (const auto& t : gens) {
            non_hyperbolic += classify(t) == IsometryClass::Hyperbolic ? 0 : 1;
            min_trace = std::min(min_trace, std::abs(t.trace()));
        }
        worst = std::max(worst, relation_defect(gens));
    }
    return {non_hyperbolic == 0 && worst < 1e-6,
            fmt("%zu polygons, %d non-hyperbolic, min |trace| %.3f, max defect %.2e", all.size(),
                non_hyperbolic, min_trace, worst)};
}

Verdict quad_solvers()
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> qs(0.3, 3.0), qa(0.1, 1.4), qt(0.2, 2.5);
    double quad_dev = 0.0, hinge_dev = 0.0;
    int violations = 0, quads = 0;
    while (quads < 100) {
        const std::array<Length, 4> s{qs(rng), qs(rng), qs(rng), qs(rng)};
        const auto [lo, hi] = hinge_interval(s, 1e-3);
        if (!(lo < hi)) {
            continue;
        }
        ++quads;
        std::uniform_real_distribution<double> dd(lo, hi);
        const QuadAngles q = quad_from_diagonal(s, dd(rng));
        const ScanResult r = quad_scan_teich(s, q.sum(), q.alt_sum());
        quad_dev = std::max(quad_dev, std::abs(r.argmin - solve_quad_teich(s, q.sum(), q.alt_sum()).diag));
        violations += r.monotonicity_violations;
    }
    for (int k = 0; k < 100; ++k) {
        const double ab = qs(rng), ad = qs(rng), bac = qa(rng), cad = qa(rng), t = qt(rng);
        const QuadAngles h = hinge_oracle(ab, ad, bac, cad, t);
        const double three = h.beta + h.gamma + h.delta;
        const ScanResult r = quad_scan_hinge(ab, ad, bac, cad, three, 1e-6, 3.0 * t);
        hinge_dev = std::max(hinge_dev, std::abs(r.argmin - solve_quad_hinge(ab, ad, bac, cad, three).diag));
        violations += r.monotonicity_violations;
    }
    return {quad_dev < 1e-4 && hinge_dev < 1e-4 && violations == 0,
            fmt("100 + 100 instances, diag dev %.2e, t dev %.2e, %d monotonicity violations", quad_dev,
                hinge_dev, violations)};
}

Verdict closure()
{
    int perturbed = 0, accepted_bad = 0, fleet_fail = 0;
    double worst_gap = 0.0;
    const auto all = realization_fleet();
    for (const auto& p : all) {
        const double gap = boundary_walk(p).magnitude();
        worst_gap = std::max(worst_gap, gap);
        try {
            realize(p);
        } catch (const Error&) {
            ++fleet_fail;
        }
        fleet_fail += gap < 1e-9 ? 0 : 1;
        for (int k = 1; k <= p.size(); ++k) {
            for (double e : {1e-3, -1e-3, 1e-2}) {
                CanonicalPolygon q = p;
                q.angle(k) += e;
                ++perturbed;
                try {
                    realize(q);
                    ++accepted_bad;
                } catch (const Error& err) {
                    accepted_bad += err.code() == ErrorCode::ClosureFailure ? 0 : 1;
                }
            }
        }
    }
    return {accepted_bad == 0 && fleet_fail == 0,
            fmt("%d perturbed polygons, %d not rejected; %zu fleet polygons, %d not accepted, max gap %.1e",
                perturbed, accepted_bad, all.size(), fleet_fail, worst_gap)};
}

/// Balanced-tag check; enough to catch truncated or interleaved output.
bool well_formed(const std::string& svg)
{
    if (svg.rfind("<?xml", 0) != 0) {
        return false;
    }
    std::vector<std::string> stack;
    std::size_t at = svg.find("?>");
    while ((at = svg.find('<', at)) != std::string::npos) {
        const std::size_t end = svg.find('>', at);
        if (end == std::string::npos) {
            return false;
        }
        const std::string tag = svg.substr(at + 1, end - at - 1);
        const std::string name = tag.substr(tag[0] == '/', tag.find_first_of(" />", 1) - (tag[0] == '/'));
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != name) {
                return false;
            }
            stack.pop_back();
        } else if (tag.back() != '/') {
            stack.push_back(name);
        }
        at = end;
    }
    return stack.empty();
}

Verdict cli_contract()
{
    const std::string s = HYPANG_SAMPLES "/";
    struct Call {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Call> calls{
        {{"validate", s + "regular_g2.json"}, 0},
        {{"validate", s + "scaled_angles_g2.json"}, 1},
        {{"validate", s + "open_g2.json"}, 2},
        {{"validate", s + "malformed.json"}, 3},
        {{"extract", s + "regular_g3.json", "--kind", "teich"}, 0},
        {{"extract", s + "generic_g3.json", "--kind", "hyper"}, 1},
        {{"extract", s + "open_g2.json", "--kind", "hyper"}, 2},
        {{"extract", s + "wrong_length.json", "--kind", "teich"}, 3},
        {{"reconstruct", s + "teich_theta_g3.json"}, 0},
        {{"reconstruct", s + "random_theta_g3.json"}, 1},
        {{"reconstruct", s + "hinge_fail_theta_g2.json"}, 2},
        {{"reconstruct", s + "malformed.json"}, 3},
        {{"embed", s + "regular_g3.json", "--model", "disk"}, 0},
        {{"embed", s + "scaled_angles_g2.json"}, 1},
        {{"embed", s + "open_g2.json"}, 2},
        {{"embed", s + "missing.json"}, 3},
        {{"generators", s + "hyper_g3.json"}, 0},
        {{"generators", s + "scaled_angles_g2.json"}, 1},
        {{"generators", s + "open_g2.json"}, 2},
        {{"generators", s + "malformed.json"}, 3},
        {{"render", s + "regular_g2.json"}, 0},
        {{"render", s + "scaled_angles_g2.json"}, 1},
        {{"render", s + "open_g2.json"}, 2},
        {{"render", s + "malformed.json"}, 3},
        {{"roundtrip", s + "regular_g3.json"}, 0},
        {{"roundtrip", s + "scaled_angles_g2.json"}, 1},
        {{"roundtrip", s + "open_g2.json"}, 2},
        {{"roundtrip", s + "malformed.json"}, 3},
        {{"oracle-sweep", "--n", "100"}, 0},
        {{"oracle-sweep", "--n", "100", "--tol", "1e-300"}, 1},
        {{"oracle-sweep", "--n", "-5"}, 3},
    };
    int wrong = 0;
    std::string misses;
    for (const auto& c : calls) {
        std::ostringstream out, err;
        const int code = cli::run(c.args, out, err);
        if (code != c.code) {
            ++wrong;
            misses += " " + c.args[0] + "->" + std::to_string(code);
        }
    }
    int svg_bad = 0;
    for (const char* f : {"regular_g2.json", "regular_g3.json", "hyper_g3.json", "generic_g3.json"}) {
        for (const char* m : {"disk", "halfplane"}) {
            std::ostringstream a, b, err;
            cli::run({"render", s + f, "--model", m}, a, err);
            cli::run({"render", s + f, "--model", m}, b, err);
            svg_bad += well_formed(a.str()) && a.str() == b.str() ? 0 : 1;
        }
    }
    return {wrong == 0 && svg_bad == 0,
            fmt("%zu exit-code cases, %d wrong;", calls.size(), wrong) + misses +
                fmt(" %d of 8 SVGs malformed or nondeterministic", svg_bad)};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::map<int, std::function<Verdict()>> criteria{
        {1, trig_suite},  {2, schmutz},      {3, teich_roundtrip}, {4, codimension},
        {5, hyper_roundtrip}, {6, gauss_bonnet}, {7, fuchsian}, {8, quad_solvers},
        {9, closure},     {10, cli_contract},
    };
    const int k = argc > 1 ? std::atoi(argv[1]) : 0;
    const auto it = criteria.find(k);
    if (it == criteria.end()) {
        std::fprintf(stderr, "usage: acceptance N   (N = 1..10)\n");
        return 2;
    }
    Verdict v{false, ""};
    try {
        v = it->second();
    } catch (const std::exception& e) {
        v = {false, std::string("uncaught: ") + e.what()};
    }
    std::printf("criterion %d: %s  %s\n", k, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    return v.pass ? 0 : 1;
}
