#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ekr/probability.hpp"
#include "ekr/random.hpp"
#include "oracles.hpp"

using namespace ekr;

namespace {

/// Sum over all 2^m subfamilies of p^|S| (1-p)^(m-|S|) for intersecting S.
ExactRatio enumerate_probability(const SetFamily& f, const ExactRatio& p) {
    const auto prof = oracle::profile(f.to_lists());
    ExactRatio total = 0;
    const std::size_t m = f.size();
    for (std::size_t t = 0; t <= m; ++t) {
        ExactRatio term(prof[t]);
        for (std::size_t i = 0; i < t; ++i) term *= p;
        for (std::size_t i = t; i < m; ++i) term *= (1 - p);
        total += term;
    }
    return total;
}

InterProfile profile_of(std::initializer_list<int> xs) {
    InterProfile p{xs.size() - 1, {}};
    for (int x : xs) p.counts.emplace_back(x);
    return p;
}

}  // namespace

TEST(Exact, SmallExamples) {
    EXPECT_EQ(prob_intersecting_exact(make_family(4, 2, {{1, 2}, {3, 4}}), ratio(1, 2)), ratio(3, 4));
    EXPECT_EQ(prob_intersecting_exact(make_family(4, 2, {{1, 2}, {2, 3}, {3, 4}}), ratio(1, 2)), ratio(3, 4));
    EXPECT_EQ(prob_intersecting_exact(make_family(3, 2, {{1, 2}, {1, 3}, {2, 3}}), ratio(1, 2)), 1);
    EXPECT_EQ(prob_intersecting_exact(make_family(4, 2, {{1, 2}, {3, 4}}), ratio(1, 3)), ratio(8, 9));
}

TEST(Exact, FromProfile) {
    EXPECT_EQ(prob_from_profile(profile_of({1, 2, 0}), 0), 1);
    EXPECT_EQ(prob_from_profile(profile_of({1, 2, 0}), 1), 0);
    EXPECT_EQ(prob_from_profile(profile_of({1, 3, 3, 1}), parse_ratio("0.3")), 1);
    EXPECT_THROW(prob_from_profile(profile_of({1, 2, 0}), ratio(3, 2)), InvalidArgument);
    EXPECT_THROW(prob_from_profile(profile_of({1, 2, 0}), ratio(-1, 2)), InvalidArgument);
    InterProfile partial{5, {1, 5}};
    EXPECT_THROW(prob_from_profile(partial, ratio(1, 2)), InvalidArgument);
}

TEST(Exact, MatchesSubfamilyEnumeration) {
    std::mt19937_64 rng(21);
    const ExactRatio ps[] = {ratio(0), ratio(1, 7), ratio(1, 2), ratio(5, 6), ratio(1)};
    for (int trial = 0; trial < 60; ++trial) {
        const SetFamily f = random_family(5 + trial % 3, 2 + trial % 2, 1 + trial % 10, rng);
        for (const auto& p : ps) EXPECT_EQ(prob_intersecting_exact(f, p), enumerate_probability(f, p));
    }
}

TEST(Exact, EndpointsAndFixedPoints) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const SetFamily f = random_family(6, 2 + trial % 2, 2 + trial % 10, rng);
        EXPECT_EQ(prob_intersecting_exact(f, 0), 1);
        EXPECT_EQ(prob_intersecting_exact(f, 1), is_intersecting(f) ? 1 : 0);
    }
    EXPECT_EQ(prob_intersecting_exact(lex_segment(7, 3, 15), ratio(2, 7)), 1);
}

TEST(Polynomial, LowOrderCoefficients) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const SetFamily f = random_family(6, 2, 2 + trial % 10, rng);
        const auto prof = inter_profile(f);
        const auto c = intersecting_polynomial(prof);
        EXPECT_EQ(c[0], 1);
        EXPECT_EQ(c[1], 0);
        // p^2 coefficient: -(number of disjoint pairs).
        EXPECT_EQ(c[2], -BigCount(disjoint_pairs(f)));
        // Evaluating the polynomial reproduces the sum.
        const ExactRatio p = ratio(2, 9);
        ExactRatio v = 0, pw = 1;
        for (const auto& x : c) {
            v += ExactRatio(x) * pw;
            pw *= p;
        }
        EXPECT_EQ(v, prob_from_profile(prof, p));
    }
}

TEST(Ranking, SmallPAgreesWithPairCountOnFiveVertexGraphs) {
    // All graphs on 5 vertices with 5 edges, p = 2^-(m+4).
    const SetFamily level = full_level(5, 2);
    const ExactRatio p(BigCount(1), BigCount(1) << 9);
    std::vector<std::pair<BigCount, ExactRatio>> rows;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        if (std::popcount(mask) != 5) continue;
        std::vector<KSet> edges;
        for (unsigned i = 0; i < 10; ++i)
            if (mask >> i & 1u) edges.push_back(level[i]);
        const SetFamily g(5, 2, edges);
        rows.emplace_back(inter_count(g, 2), prob_intersecting_exact(g, p));
    }
    for (const auto& a : rows)
        for (const auto& b : rows) {
            if (a.first > b.first) {
                EXPECT_GT(a.second, b.second);
            }
        }
}

TEST(Float, CloseToExact) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const SetFamily f = random_family(7, 3, 5 + trial % 20, rng);
        const ExactRatio p = ratio(1 + trial % 9, 10);
        const long double approx = prob_intersecting_float(f, to_long_double(p));
        EXPECT_NEAR(static_cast<double>(approx), static_cast<double>(prob_intersecting_exact(f, p)), 1e-15);
    }
}

TEST(MonteCarlo, IntersectingAndEmptyCases) {
    const SetFamily star = lex_segment(6, 2, 5);
    const auto a = mc_estimate(star, 0.5, 1000, 1);
    EXPECT_EQ(a.hits, 1000u);
    EXPECT_EQ(a.estimate, 1.0);
    const auto b = mc_estimate(make_family(4, 2, {{1, 2}, {3, 4}}), 0.0, 1000, 9);
    EXPECT_EQ(b.estimate, 1.0);
    EXPECT_LE(b.ci_low, b.estimate);
    EXPECT_GE(b.ci_high, b.estimate);
    EXPECT_THROW(mc_estimate(star, 0.5, 0, 1), InvalidArgument);
    EXPECT_THROW(mc_estimate(star, 1.5, 10, 1), InvalidArgument);
}

TEST(MonteCarlo, DisjointPairWithinInterval) {
    const auto e = mc_estimate(make_family(4, 2, {{1, 2}, {3, 4}}), 0.5, 100000, 7);
    EXPECT_LE(e.ci_low, 0.75);
    EXPECT_GE(e.ci_high, 0.75);
    EXPECT_LE(e.hits, e.samples);
}

TEST(MonteCarlo, DeterministicAcrossThreadCounts) {
    const SetFamily f = lex_segment(6, 2, 12);
    const auto one = mc_estimate(f, 0.3, 20000, 42, 1);
    const auto four = mc_estimate(f, 0.3, 20000, 42, 4);
    EXPECT_EQ(one.hits, four.hits);
    EXPECT_EQ(one.hits, mc_estimate(f, 0.3, 20000, 42, 3).hits);
    EXPECT_NE(one.hits, mc_estimate(f, 0.3, 20000, 43, 1).hits);
}

TEST(Wilson, Interval) {
    const auto [lo, hi] = wilson_interval(0, 100);
    EXPECT_EQ(lo, 0.0);
    EXPECT_GT(hi, 0.0);
    const auto [lo2, hi2] = wilson_interval(50, 100);
    EXPECT_NEAR(lo2, 0.4038, 1e-3);
    EXPECT_NEAR(hi2, 0.5962, 1e-3);
}
