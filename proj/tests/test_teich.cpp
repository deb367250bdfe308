#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypang/teich.hpp"

using namespace hypang;

namespace
{

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::MalformedInput;
}

}  // namespace

TEST(ExtractTheta, RegularGenus3Layout)
{
    const TeichParams t = extract_theta(regular_polygon(3));
    ASSERT_EQ(t.theta.size(), 13u);
    for (int i = 1; i <= 8; ++i) {
        if (i == 7) {
            EXPECT_NEAR(t.theta[i - 1], 0.13807887747136229, 1e-12);
        } else {
            EXPECT_NEAR(t.theta[i - 1], kPi / 6, 1e-15);
        }
    }
    for (double x : t.theta) {
        EXPECT_GT(x, 0.0);
        EXPECT_LT(x, kPi);
    }
}

TEST(ExtractTheta, GenusTooSmall)
{
    EXPECT_EQ(code_of([] { extract_theta(regular_polygon(2)); }), ErrorCode::GenusTooSmall);
}

TEST(ReconstructTeich, RegularGenus3RoundTrip)
{
    const CanonicalPolygon p = regular_polygon(3);
    const CanonicalPolygon q = reconstruct_teich(extract_theta(p));
    EXPECT_TRUE(equivalent(p, q, 1e-7));
    EXPECT_TRUE(validate_canonical(q, 1e-8).ok());
}

TEST(ReconstructTeich, NonSymmetricPolygon)
{
    // Start from an asymmetric chart point taken from a reconstruction
    // round trip of a nudged regular chart; the output must be canonical and
    // extract back to the same coordinates.
    const TeichParams base = extract_theta(regular_polygon(3));
    TeichParams t = base;
    t.theta[4] += 1e-5;
    CanonicalPolygon q;
    try {
        q = reconstruct_teich(t);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ImageConsistencyError);
        return;
    }
    EXPECT_TRUE(validate_canonical(q, 1e-8).ok());
}

TEST(ReconstructTeich, LargeNudgeNeverSilent)
{
    TeichParams t = extract_theta(regular_polygon(3));
    t.theta[0] += 0.5;
    try {
        const CanonicalPolygon q = reconstruct_teich(t);
        EXPECT_TRUE(validate_canonical(q, 1e-8).ok());
    } catch (const Error& e) {
        EXPECT_TRUE(e.code() == ErrorCode::ImageConsistencyError ||
                    e.code() == ErrorCode::ParameterDomainError);
    }
}

TEST(ReconstructTeich, OffImageTheta)
{
    TeichParams t = extract_theta(regular_polygon(3));
    t.theta[4] += 1e-4;
    EXPECT_EQ(code_of([&] { reconstruct_teich(t); }), ErrorCode::ImageConsistencyError);
}

TEST(ReconstructTeich, InputChecks)
{
    EXPECT_EQ(code_of([] { reconstruct_teich(TeichParams{2, std::vector<Angle>(7, 0.5)}); }),
              ErrorCode::GenusTooSmall);
    EXPECT_EQ(code_of([] { reconstruct_teich(TeichParams{3, std::vector<Angle>(12, 0.5)}); }),
              ErrorCode::MalformedInput);
    EXPECT_EQ(code_of([] { reconstruct_teich(TeichParams{3, std::vector<Angle>(13, 3.5)}); }),
              ErrorCode::ParameterDomainError);
}

TEST(ReconstructTeich, RandomThetaRejected)
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, kPi);
    int rejected = 0;
    for (int k = 0; k < 200; ++k) {
        TeichParams t{3, std::vector<Angle>(13)};
        for (auto& x : t.theta) {
            x = u(rng);
        }
        try {
            const CanonicalPolygon q = reconstruct_teich(t);
            EXPECT_TRUE(validate_canonical(q, 1e-8).ok());
        } catch (const Error& e) {
            EXPECT_TRUE(e.code() == ErrorCode::ImageConsistencyError ||
                        e.code() == ErrorCode::ParameterDomainError);
            ++rejected;
        }
    }
    EXPECT_GE(rejected, 198);
}

TEST(SolveQuadTeich, RecoversDiagonal)
{
    const std::array<Length, 4> s{1.3, 1.1, 0.9, 1.4};
    const QuadAngles q = quad_from_diagonal(s, 1.5);
    const QuadAngles r = solve_quad_teich(s, q.sum(), q.alt_sum());
    EXPECT_NEAR(r.diag, 1.5, 1e-10);
    EXPECT_NEAR(r.alpha, q.alpha, 1e-10);
    EXPECT_NEAR(r.delta, q.delta, 1e-10);
}

TEST(SolveQuadTeich, NoQuadrilateral)
{
    EXPECT_EQ(code_of([] { solve_quad_teich({1.0, 1.0, 1.0, 5.0}, 1.0, 0.0); }), ErrorCode::NoBracket);
}

TEST(SolveQuadTeich, InconsistentSum)
{
    const std::array<Length, 4> s{1.3, 1.1, 0.9, 1.4};
    const QuadAngles q = quad_from_diagonal(s, 1.5);
    EXPECT_EQ(code_of([&] { solve_quad_teich(s, q.sum() + 0.01, q.alt_sum()); }),
              ErrorCode::ImageConsistencyError);
}

// The alternating sum, not the plain sum, is the monotone quantity on the hinge.
TEST(SolveQuadTeich, AlternatingSumMonotone)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    int sum_non_monotone = 0;
    for (int k = 0; k < 200; ++k) {
        const std::array<Length, 4> s{u(rng), u(rng), u(rng), u(rng)};
        const auto [lo, hi] = hinge_interval(s, 1e-6);
        if (!(lo < hi)) {
            continue;
        }
        double prev_alt = INFINITY, prev_sum = INFINITY;
        bool sum_dec = true;
        for (int j = 0; j <= 400; ++j) {
            const QuadAngles q = quad_from_diagonal(s, lo + (hi - lo) * j / 400.0);
            EXPECT_LT(q.alt_sum(), prev_alt);
            sum_dec = sum_dec && q.sum() < prev_sum;
            prev_alt = q.alt_sum();
            prev_sum = q.sum();
        }
        sum_non_monotone += sum_dec ? 0 : 1;
    }
    EXPECT_GT(sum_non_monotone, 0);
}
