// Exhaustive axiom checks, minimal relaxation constant, and the two
// b-metric <-> S_b-metric constructions as property tests.

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sbfig/axioms.hpp"

using namespace sbfig;

namespace {

Point R(double x) { return Point::real(x); }

SpaceSample reals(const std::vector<double>& xs, SbMetricSpec m) {
    std::vector<Point> pts;
    for (double x : xs) pts.push_back(R(x));
    return SpaceSample(std::move(pts), std::move(m));
}

SbMetricSpec scaled_square_metric(double claimed_b = 4) {
    return SbMetricSpec::power_sum(BaseMetricSpec::absolute(), 2, 1.0 / 16, claimed_b);
}

std::vector<double> range(double lo, double hi, double step) {
    std::vector<double> out;
    for (int i = 0; lo + i * step <= hi + 1e-12; ++i) out.push_back(lo + i * step);
    return out;
}

/// n distinct reals on a coarse lattice so that ties and coincidences occur.
std::vector<double> random_reals(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> u(-40, 40);
    std::vector<double> out;
    while (out.size() < n) {
        const double v = u(rng) / 4.0;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST(VerifyAxioms, SVariantIsAnSMetric) {
    auto rep = verify_axioms(reals({-1, 0, 1, 2}, SbMetricSpec::s_variant()), 1.0);
    EXPECT_TRUE(rep.passed());
    EXPECT_TRUE(rep.s1_violations.empty());
    EXPECT_EQ(rep.s2_violation_count, 0u);
    EXPECT_TRUE(rep.symmetric);
}

TEST(VerifyAxioms, ScaledSquareFailsAtBOne) {
    const std::vector<double> xs{0, 1, 2};
    auto rep = verify_axioms(reals(xs, scaled_square_metric()), 1.0);
    EXPECT_FALSE(rep.passed());
    EXPECT_EQ(rep.s2_violation_count, oracle::count_s2_violations(xs, oracle::power_sum(1.0 / 16, 2), 1.0));
    // witness (x, y, z; a) = (0, 0, 2; 1): 1 vs 0.75
    bool found = false;
    for (const auto& v : rep.s2_violations)
        if (v.i == 0 && v.j == 0 && v.k == 2 && v.a == 1) {
            found = true;
            EXPECT_DOUBLE_EQ(v.lhs, 1.0);
            EXPECT_DOUBLE_EQ(v.rhs_sum, 0.75);
            EXPECT_DOUBLE_EQ(v.ratio, 4.0 / 3.0);
        }
    EXPECT_TRUE(found);
    for (const auto& v : rep.s2_violations) EXPECT_GT(v.ratio, 1.0);
}

TEST(VerifyAxioms, ScaledSquarePassesAtBFour) {
    auto rep = verify_axioms(reals(range(0, 10, 1), scaled_square_metric()), 4.0);
    EXPECT_TRUE(rep.passed());
}

TEST(VerifyAxioms, ListingCapKeepsExactCount) {
    const auto xs = range(0, 5, 0.5);
    auto full = verify_axioms(reals(xs, scaled_square_metric()), 1.0);
    auto capped = verify_axioms(reals(xs, scaled_square_metric()), 1.0, {kDefaultTolerance, 1, 5});
    EXPECT_EQ(capped.s2_violations.size(), 5u);
    EXPECT_EQ(capped.s2_violation_count, full.s2_violation_count);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(capped.s2_violations[i].a, full.s2_violations[i].a);
}

TEST(VerifyAxioms, ParallelSweepMatchesSequential) {
    const auto xs = range(0, 6, 0.25);
    auto seq = verify_axioms(reals(xs, scaled_square_metric()), 1.0, {kDefaultTolerance, 1});
    for (unsigned t : {2u, 3u, 8u}) {
        auto par = verify_axioms(reals(xs, scaled_square_metric()), 1.0, {kDefaultTolerance, t});
        ASSERT_EQ(par.s2_violations.size(), seq.s2_violations.size());
        for (std::size_t i = 0; i < seq.s2_violations.size(); ++i) {
            const auto& a = seq.s2_violations[i];
            const auto& b = par.s2_violations[i];
            EXPECT_TRUE(a.i == b.i && a.j == b.j && a.k == b.k && a.a == b.a && a.lhs == b.lhs);
        }
        EXPECT_EQ(par.minimal_b_estimate, seq.minimal_b_estimate);
    }
}

TEST(VerifyAxioms, ZeroForDistinctPointsIsS1Violation) {
    // d(x,z) + d(y,z) with a degenerate table distance between two labels.
    auto d = BaseMetricSpec::table({"p", "q"}, {{0, 0}, {0, 0}});
    std::vector<Point> pts{Point::labeled("p"), Point::labeled("q")};
    auto rep = verify_axioms(SpaceSample(pts, sb_from_b_metric(d)), 1.0);
    EXPECT_FALSE(rep.passed());
    ASSERT_FALSE(rep.s1_violations.empty());
    EXPECT_FALSE(rep.s1_violations.front().expected_zero);
}

// ---------------------------------------------------------------------------
// minimal_b
// ---------------------------------------------------------------------------

TEST(MinimalB, SVariantNeedsNoRelaxation) {
    const std::vector<double> xs{-1, 0, 1, 2};
    auto mb = minimal_b(reals(xs, SbMetricSpec::s_variant()));
    ASSERT_TRUE(mb.has_value());
    EXPECT_LE(*mb, 1.0);
    EXPECT_DOUBLE_EQ(*mb, oracle::max_ratio(xs, oracle::s_variant));
}

TEST(MinimalB, ScaledSquareWitness) {
    const std::vector<double> xs{0, 1, 2};
    auto mb = minimal_b(reals(xs, scaled_square_metric()));
    ASSERT_TRUE(mb.has_value());
    EXPECT_GE(*mb, 4.0 / 3.0);
    EXPECT_DOUBLE_EQ(*mb, oracle::max_ratio(xs, oracle::power_sum(1.0 / 16, 2)));
}

TEST(MinimalB, SinglePointIsUndefined) {
    EXPECT_FALSE(minimal_b(reals({3.0}, SbMetricSpec::s_variant())).has_value());
    EXPECT_FALSE(verify_axioms(reals({3.0}, SbMetricSpec::s_variant()), 1.0).minimal_b_estimate.has_value());
}

TEST(MinimalB, AgreesWithBruteForceOracle) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const auto xs = random_reals(rng, 2 + t % 6);
        const double p = 1.5 + (t % 4) * 0.5;
        auto mb = minimal_b(reals(xs, SbMetricSpec::power_sum(BaseMetricSpec::absolute(), p, 1, 9)));
        ASSERT_TRUE(mb.has_value());
        EXPECT_NEAR(*mb, oracle::max_ratio(xs, oracle::power_sum(1, p)), 1e-12 * *mb);
    }
}

TEST(MinimalB, MonotoneConsistency) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const auto xs = random_reals(rng, 3 + t % 5);
        auto sample = reals(xs, SbMetricSpec::power_sum(BaseMetricSpec::absolute(), 2 + (t % 3), 1, 9));
        const auto mb = minimal_b(sample);
        ASSERT_TRUE(mb.has_value());
        for (double factor : {1.0, 1.001, 1.5, 3.0})
            EXPECT_EQ(verify_axioms(sample, *mb * factor).s2_violation_count, 0u) << "b = " << *mb * factor;
        for (double eps : {1e-6, 1e-3, 0.1}) {
            const double b = *mb - eps;
            if (b <= 0) continue;
            EXPECT_GT(verify_axioms(sample, b).s2_violation_count, 0u) << "b = " << b;
        }
    }
}

// ---------------------------------------------------------------------------
// Constructions, 100 random instances each
// ---------------------------------------------------------------------------

TEST(ConstructionProperties, FromBMetricPassesAtBaseConstant) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> q_dist(1.0, 3.0);
    for (int t = 0; t < 100; ++t) {
        const auto xs = random_reals(rng, 2 + t % 7);
        // |x - y|^q is a b-metric with b = 2^(q-1).
        const double q = q_dist(rng);
        std::vector<std::string> labels;
        std::vector<std::vector<double>> table(xs.size(), std::vector<double>(xs.size()));
        for (std::size_t i = 0; i < xs.size(); ++i) {
            labels.push_back("p" + std::to_string(i));
            for (std::size_t j = 0; j < xs.size(); ++j) table[i][j] = std::pow(std::fabs(xs[i] - xs[j]), q);
        }
        const double b = std::pow(2.0, q - 1);
        auto d = BaseMetricSpec::table(labels, table, b);
        std::vector<Point> pts;
        for (const auto& l : labels) pts.push_back(Point::labeled(l));
        ASSERT_TRUE(triangle_violations(std::span<const Point>(pts), d, b).empty());
        auto m = sb_from_b_metric(d);
        EXPECT_EQ(m.claimed_b(), b);
        auto rep = verify_axioms(SpaceSample(pts, m), m.claimed_b());
        EXPECT_TRUE(rep.passed()) << "instance " << t << ": " << rep.s2_violation_count << " S_b2 violations";
    }
}

TEST(ConstructionProperties, InducedMetricSatisfiesDoubledTriangle) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> p_dist(1.1, 3.0);
    for (int t = 0; t < 100; ++t) {
        const auto xs = random_reals(rng, 2 + t % 7);
        SbMetricSpec m = SbMetricSpec::s_variant();
        switch (t % 3) {
            case 0: break;
            case 1: m = SbMetricSpec::power_sum(BaseMetricSpec::absolute(), p_dist(rng), 0.5, 9); break;
            case 2: m = sb_from_b_metric(BaseMetricSpec::absolute()); break;
        }
        auto sample = reals(xs, m);
        // Use the tightest constant valid on the sample as b.
        const auto mb = minimal_b(sample);
        ASSERT_TRUE(mb.has_value());
        auto src = m.with_claimed_b(std::max(1.0, *mb));
        auto d = b_metric_from_sb(src, sample);
        EXPECT_TRUE(triangle_violations(std::span<const Point>(sample.points()), d, d.derived_bound()).empty())
            << "instance " << t;
    }
}
