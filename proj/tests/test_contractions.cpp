// phi functions, self-map resolution and the five contraction conditions.

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "sbfig/contractions.hpp"

using namespace sbfig;
using fixtures::R;

namespace {

ContractionSpec spec(ContractionKind k, std::vector<double> anchors, double alpha, PhiKind phi = PhiKind::affine) {
    ContractionSpec c{k, {}, alpha, phi};
    for (double a : anchors) c.anchors.push_back(R(a));
    return c;
}

const SbMetricSpec kS = SbMetricSpec::s_variant();

}  // namespace

TEST(Phi, Values) {
    EXPECT_EQ(eval_phi(PhiKind::affine, 2), 3.0);
    EXPECT_EQ(eval_phi(PhiKind::affine, 16), 17.0);
    EXPECT_DOUBLE_EQ(eval_phi(PhiKind::exp, 1), std::exp(1.0));
    EXPECT_DOUBLE_EQ(eval_phi(PhiKind::exp_sqrt, 4), std::exp(2.0));
}

TEST(Phi, DomainIsPositiveReals) {
    for (auto k : {PhiKind::affine, PhiKind::exp, PhiKind::exp_sqrt}) {
        EXPECT_THROW(eval_phi(k, 0), DomainError);
        EXPECT_THROW(eval_phi(k, -1), DomainError);
        EXPECT_THROW(log_phi(k, 0), DomainError);
    }
}

TEST(Phi, NonDecreasingAndAboveOne) {
    for (auto k : {PhiKind::affine, PhiKind::exp, PhiKind::exp_sqrt}) {
        double prev_log = 0.0;
        for (int e = -60; e <= 60; ++e) {
            const double t = std::pow(10.0, e / 10.0);
            const double lp = log_phi(k, t);
            EXPECT_GT(lp, 0.0) << to_string(k) << " t = " << t;
            EXPECT_GE(lp, prev_log);
            prev_log = lp;
            const double v = eval_phi(k, t);
            if (std::isfinite(v)) {
                EXPECT_NEAR(std::log(v), lp, 1e-12 * std::max(1.0, lp));
            }
        }
    }
}

TEST(Phi, NameRoundTrip) {
    for (auto k : {PhiKind::affine, PhiKind::exp, PhiKind::exp_sqrt}) EXPECT_EQ(parse_phi_kind(to_string(k)), k);
    EXPECT_FALSE(parse_phi_kind("log").has_value());
    for (auto k : {ContractionKind::D, ContractionKind::E, ContractionKind::H, ContractionKind::C, ContractionKind::A})
        EXPECT_EQ(parse_contraction_kind(to_string(k)), k);
}

// ---------------------------------------------------------------------------
// Maps
// ---------------------------------------------------------------------------

TEST(ResolvedMap, OverridesAndIdentity) {
    const auto s = fixtures::interval_space();
    ResolvedMap f(s, fixtures::interval_map());
    const auto i8 = *s.index_of(R(8));
    EXPECT_EQ(f(i8), *s.index_of(R(7)));
    EXPECT_FALSE(f.fixes(i8));
    EXPECT_TRUE(f.fixes(*s.index_of(R(0))));
}

TEST(ResolvedMap, RejectsUnknownAndDuplicateSources) {
    const auto s = fixtures::reals({0, 1, 2});
    EXPECT_THROW(ResolvedMap(s, SelfMapSpec{{{R(5), R(0)}}}), InputError);
    EXPECT_THROW(ResolvedMap(s, SelfMapSpec{{{R(0), R(5)}}}), InputError);
    EXPECT_THROW(ResolvedMap(s, SelfMapSpec{{{R(0), R(1)}, {R(0), R(2)}}}), InputError);
}

// ---------------------------------------------------------------------------
// Right-hand side expressions and pointwise checks
// ---------------------------------------------------------------------------

TEST(RhsExpression, Examples) {
    const Point d[] = {R(0)};
    const Point h[] = {R(-1), R(1)};
    const Point a[] = {R(-7), R(7)};
    EXPECT_EQ(rhs_expression(ContractionKind::D, kS, d, R(8)), 16.0);
    EXPECT_EQ(rhs_expression(ContractionKind::H, kS, h, R(8)), 4.0);
    EXPECT_EQ(rhs_expression(ContractionKind::A, kS, a, R(8)), 15.0);
    EXPECT_THROW(rhs_expression(ContractionKind::E, kS, h, R(1)), DomainError);
    EXPECT_THROW(rhs_expression(ContractionKind::A, kS, a, R(-7)), DomainError);
}

TEST(RhsExpression, EqualsFigureValue) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-20, 20);
    for (int t = 0; t < 500; ++t) {
        const Point anchors[] = {R(u(rng)), R(u(rng))};
        const Point x = R(u(rng));
        for (auto k : {ContractionKind::E, ContractionKind::H, ContractionKind::C, ContractionKind::A})
            EXPECT_EQ(rhs_expression(k, kS, anchors, x), figure_value(matching_figure(k), kS, anchors, x));
        EXPECT_EQ(rhs_expression(ContractionKind::D, kS, std::span<const Point>(anchors, 1), x),
                  figure_value(FigureKind::disc, kS, std::span<const Point>(anchors, 1), x));
    }
}

TEST(HoldsAt, DiscConditionAtMovedPoint) {
    const auto s = fixtures::interval_space();
    const auto pc = contraction_holds_at(s, fixtures::interval_map(), spec(ContractionKind::D, {0}, 0.5), R(8));
    EXPECT_EQ(pc.verdict, Verdict::holds);
    EXPECT_EQ(pc.displacement, 2.0);
    EXPECT_EQ(pc.lhs, 3.0);
    EXPECT_DOUBLE_EQ(pc.rhs, std::sqrt(17.0));
}

TEST(HoldsAt, HyperbolaConditionFailsAtHalf) {
    const auto s = fixtures::interval_space();
    const auto pc = contraction_holds_at(s, fixtures::interval_map(), spec(ContractionKind::H, {-1, 1}, 0.5), R(8));
    EXPECT_EQ(pc.verdict, Verdict::violated);
    EXPECT_DOUBLE_EQ(pc.rhs, std::sqrt(5.0));
}

TEST(HoldsAt, FixedPointIsVacuous) {
    const auto s = fixtures::interval_space();
    const auto pc = contraction_holds_at(s, fixtures::interval_map(), spec(ContractionKind::H, {-1, 1}, 0.5), R(0));
    EXPECT_EQ(pc.verdict, Verdict::vacuous);
}

TEST(HoldsAt, ZeroExpressionIsUndefined) {
    // hyperbola expression vanishes at the midpoint of the foci
    const auto s = fixtures::reals({-1, 0, 1});
    const auto pc = contraction_holds_at(s, SelfMapSpec{{{R(0), R(1)}}}, spec(ContractionKind::H, {-1, 1}, 0.5), R(0));
    EXPECT_EQ(pc.verdict, Verdict::undefined);
}

TEST(HoldsAt, AnchorsAreExcluded) {
    const auto s = fixtures::reals({-1, 0, 1});
    EXPECT_THROW(contraction_holds_at(s, SelfMapSpec{}, spec(ContractionKind::E, {-1, 1}, 0.5), R(-1)), DomainError);
    EXPECT_NO_THROW(contraction_holds_at(s, SelfMapSpec{}, spec(ContractionKind::D, {-1}, 0.5), R(-1)));
}

TEST(HoldsAt, OverflowFallsBackToLogSpace) {
    const auto s = fixtures::reals({0, 400, 1000});
    // exp(800) overflows; compared as 800 <= alpha * 1200
    const SelfMapSpec f{{{R(400), R(0)}}};
    EXPECT_EQ(contraction_holds_at(s, f, spec(ContractionKind::D, {1000}, 0.9, PhiKind::exp), R(400)).verdict,
              Verdict::holds);
    EXPECT_EQ(contraction_holds_at(s, f, spec(ContractionKind::D, {1000}, 0.5, PhiKind::exp), R(400)).verdict,
              Verdict::violated);
}

TEST(SpecValidation, AlphaAndAnchors) {
    const auto s = fixtures::reals({0, 1});
    EXPECT_THROW(check_contraction(s, SelfMapSpec{}, spec(ContractionKind::D, {0}, 1.0)), InputError);
    EXPECT_THROW(check_contraction(s, SelfMapSpec{}, spec(ContractionKind::D, {0}, 0.0)), InputError);
    EXPECT_THROW(check_contraction(s, SelfMapSpec{}, spec(ContractionKind::E, {0}, 0.5)), InputError);
}

// ---------------------------------------------------------------------------
// Whole-sample checks
// ---------------------------------------------------------------------------

TEST(CheckContraction, EllipseOnExampleSpace) {
    const auto s = fixtures::interval_space();
    const auto rep = check_contraction(s, fixtures::interval_map(), spec(ContractionKind::E, {-0.5, 0.5}, 0.5));
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.holds_count, 1u);
    EXPECT_EQ(rep.excluded.size(), 2u);
    EXPECT_EQ(rep.vacuous_count, s.size() - 3);
}

TEST(CheckContraction, HyperbolaDependsOnAlpha) {
    const auto s = fixtures::interval_space();
    EXPECT_TRUE(check_contraction(s, fixtures::interval_map(), spec(ContractionKind::H, {-1, 1}, 0.9)).passed());
    const auto rep = check_contraction(s, fixtures::interval_map(), spec(ContractionKind::H, {-1, 1}, 0.5));
    ASSERT_EQ(rep.violations.size(), 1u);
    EXPECT_EQ(s[rep.violations[0].index], R(8));
}

TEST(CheckContraction, ParallelMatchesSequential) {
    const auto s = fixtures::interval_space();
    SelfMapSpec f;
    for (int i = 0; i < 50; ++i) f.overrides.emplace_back(s[2 * i], s[2 * i + 1]);
    const auto c = spec(ContractionKind::C, {-1, 1}, 0.3);
    const auto a = check_contraction(s, f, c, 1);
    const auto b = check_contraction(s, f, c, 4);
    ASSERT_EQ(a.violations.size(), b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) EXPECT_EQ(a.violations[i].index, b.violations[i].index);
    EXPECT_EQ(a.holds_count, b.holds_count);
    EXPECT_EQ(a.undefined, b.undefined);
}

TEST(CheckContractionProperties, IdentityIsVacuousEverywhere) {
    const auto s = fixtures::interval_space();
    for (auto k : {ContractionKind::E, ContractionKind::H, ContractionKind::C, ContractionKind::A}) {
        const auto rep = check_contraction(s, SelfMapSpec::identity(), spec(k, {-1, 1}, 0.5));
        EXPECT_TRUE(rep.passed());
        EXPECT_EQ(rep.vacuous_count, s.size() - 2);
    }
    EXPECT_EQ(check_contraction(s, SelfMapSpec::identity(), spec(ContractionKind::D, {0}, 0.5)).vacuous_count, s.size());
}

TEST(CheckContractionProperties, AlphaMonotonicity) {
    // with phi > 1, raising alpha can only turn violations into passes
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> u(-20, 20);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> xs;
        while (xs.size() < 8) {
            const double v = u(rng) / 2.0;
            if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
        }
        const auto s = fixtures::reals(xs);
        SelfMapSpec f;
        for (std::size_t i = 2; i < xs.size(); i += 2) f.overrides.emplace_back(R(xs[i]), R(xs[(i + 3) % xs.size()]));
        const auto kind = static_cast<ContractionKind>(t % 5);
        const std::vector<double> anchors = kind == ContractionKind::D ? std::vector<double>{xs[0]}
                                                                       : std::vector<double>{xs[0], xs[1]};
        const auto phi = static_cast<PhiKind>(t % 3);
        std::size_t prev = xs.size() + 1;
        for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const auto n = check_contraction(s, f, spec(kind, anchors, alpha, phi)).violations.size();
            EXPECT_LE(n, prev);
            prev = n;
        }
    }
}
