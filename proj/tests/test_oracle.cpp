#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hypang/oracle.hpp"

using namespace hypang;

TEST(TriangleOracle, Pythagoras)
{
    const double s = std::acosh(std::sqrt(2.0));
    const Triangle t = triangle_oracle(s, kPi / 2, s);
    EXPECT_NEAR(t.c, std::acosh(2.0), 1e-13);
    EXPECT_NEAR(t.alpha, t.beta, 1e-13);
}

TEST(TriangleOracle, Equilateral)
{
    const double s = 1.5285709194809982;
    const Triangle t = triangle_oracle(s, kPi / 4, s);
    EXPECT_NEAR(t.c, s, 1e-12);
    EXPECT_NEAR(t.alpha, kPi / 4, 1e-12);
    EXPECT_NEAR(t.beta, kPi / 4, 1e-12);
}

TEST(TriangleOracle, AgreesWithClosedForms)
{
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> side(0.01, 5.0), ang(0.01, kPi - 0.01);
    OracleReport rep;
    for (int k = 0; k < 10000; ++k) {
        const double a = side(rng), g = ang(rng), b = side(rng);
        const Triangle o = triangle_oracle(a, g, b), t = solve_sas(a, g, b);
        rep.add("c", o.c, t.c);
        rep.add("alpha", o.alpha, t.alpha);
        rep.add("beta", o.beta, t.beta);
    }
    EXPECT_EQ(rep.size(), 30000u);
    EXPECT_LT(rep.max_rel_dev(), 1e-9);
}

TEST(QuadOracle, MatchesSolvedQuad)
{
    const std::array<Length, 4> s{1.3, 1.1, 0.9, 1.4};
    QuadAngles o;
    ASSERT_TRUE(quad_oracle(s, 1.5, o));
    const QuadAngles q = quad_from_diagonal(s, 1.5);
    EXPECT_NEAR(o.alpha, q.alpha, 1e-11);
    EXPECT_NEAR(o.beta, q.beta, 1e-11);
    EXPECT_NEAR(o.gamma, q.gamma, 1e-11);
    EXPECT_NEAR(o.delta, q.delta, 1e-11);
}

TEST(QuadOracle, ScanAgreesWithBisection)
{
    const std::array<Length, 4> s{1.3, 1.1, 0.9, 1.4};
    const QuadAngles q = quad_from_diagonal(s, 1.5);
    const QuadAngles r = solve_quad_teich(s, q.sum(), q.alt_sum());
    const ScanResult scan = quad_scan_teich(s, q.sum(), q.alt_sum());
    EXPECT_NEAR(scan.argmin, r.diag, 1e-4);
    EXPECT_EQ(scan.monotonicity_violations, 0);
    EXPECT_GT(scan.samples, 90000);
}

TEST(HingeOracle, ScanAgreesWithBisection)
{
    const Length ab = 1.2, ad = 0.9;
    const Angle bac = 0.7, cad = 0.5;
    const QuadAngles target = hinge_oracle(ab, ad, bac, cad, 1.3);
    const double three = target.beta + target.gamma + target.delta;
    const QuadAngles r = solve_quad_hinge(ab, ad, bac, cad, three);
    EXPECT_NEAR(r.diag, 1.3, 1e-9);
    const ScanResult scan = quad_scan_hinge(ab, ad, bac, cad, three, 1e-3, 8.0);
    EXPECT_NEAR(scan.argmin, r.diag, 1e-4);
    EXPECT_EQ(scan.monotonicity_violations, 0);
    EXPECT_NEAR(r.sides[1], target.sides[1], 1e-9);
    EXPECT_NEAR(r.sides[2], target.sides[2], 1e-9);
}

class Fleet : public ::testing::TestWithParam<int>
{
};

TEST_P(Fleet, PerturbedPolygonsAreCanonical)
{
    const int g = GetParam();
    std::mt19937_64 rng(1000 + g);
    for (bool hyper : {false, true}) {
        for (int k = 0; k < 5; ++k) {
            const CanonicalPolygon p = perturbed_polygon(g, 0.02, rng, hyper);
            EXPECT_TRUE(validate_canonical(p, 1e-9).ok());
            EXPECT_LT(boundary_walk(p).magnitude(), 1e-9);
            EXPECT_GT(polygon_deviation(p, regular_polygon(g)), 1e-4);
            if (hyper) {
                EXPECT_TRUE(is_hyperelliptic(p, 0.0));
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Genus, Fleet, ::testing::Values(2, 3, 4, 5));

TEST(Fleet, ProjectionStaysNearStart)
{
    std::mt19937_64 rng(77);
    const CanonicalPolygon p = perturbed_polygon(3, 0.0, rng, false);
    EXPECT_LT(polygon_deviation(p, regular_polygon(3)), 1e-10);
    CanonicalPolygon q = regular_polygon(3);
    q.angle(5) += 0.01;
    const CanonicalPolygon r = project_canonical(q, false);
    EXPECT_LT(polygon_deviation(q, r), 0.02);
    EXPECT_TRUE(validate_canonical(r, 1e-9).ok());
}

// Round-trip pass rates are acceptance criteria; here the harness itself is
// checked: every quantity is reported and the geometric lines are clean.
TEST(Harness, SmallFleet)
{
    FleetSpec spec;
    spec.genera = {2, 3};
    spec.perturbed_per_genus = 3;
    spec.random_theta = 40;
    const auto lines = roundtrip_harness(spec);
    std::vector<std::string> names;
    for (const auto& l : lines) {
        names.push_back(l.quantity);
        EXPECT_GT(l.cases, 0);
        if (l.quantity.find("roundtrip") == std::string::npos) {
            EXPECT_EQ(l.failures, 0) << l.quantity << " max dev " << l.max_deviation;
        }
    }
    for (const char* want : {"validate g=2", "area g=2", "relation_defect g=3", "teich_roundtrip g=3",
                             "hyper_roundtrip g=2", "hyper_roundtrip g=3", "random_theta_rejected g=3"}) {
        EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
    }
}

TEST(HingeOracle, MonotoneAudit)
{
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> side(0.2, 3.0), ang(0.05, 1.5);
    for (int k = 0; k < 100; ++k) {
        const double ab = side(rng), ad = side(rng), bac = ang(rng), cad = ang(rng);
        const ScanResult r = quad_scan_hinge(ab, ad, bac, cad, 1.0, 1e-3, 6.0, 1000);
        EXPECT_EQ(r.monotonicity_violations, 0) << ab << " " << ad << " " << bac << " " << cad;
    }
}

TEST(HingeOracle, RecoversCoordinateQuad)
{
    std::mt19937_64 rng(56);
    std::uniform_real_distribution<double> side(0.3, 2.0), ang(0.2, 1.2), tt(0.3, 2.0);
    for (int k = 0; k < 50; ++k) {
        const double ab = side(rng), ad = side(rng), bac = ang(rng), cad = ang(rng), t = tt(rng);
        const QuadAngles h = hinge_oracle(ab, ad, bac, cad, t);
        const QuadAngles r = solve_quad_hinge(ab, ad, bac, cad, h.beta + h.gamma + h.delta);
        EXPECT_NEAR(r.diag, t, 1e-8);
    }
}
