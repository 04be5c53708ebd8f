#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "ekr/exactmath.hpp"
#include "oracles.hpp"

using namespace ekr;

TEST(Binomial, MatchesPascal) {
    for (long a = 0; a <= 80; ++a)
        for (long b = -1; b <= a + 1; ++b) EXPECT_EQ(binom(a, b), oracle::binom(a, b)) << a << " " << b;
}

TEST(Binomial, Values) {
    EXPECT_EQ(binom(0, 0), 1);
    EXPECT_EQ(binom(5, 2), 10);
    EXPECT_EQ(binom(3, 5), 0);
    EXPECT_EQ(binom(-1, 0), 0);
    EXPECT_EQ(binom(100, 50), BigCount("100891344545564193334812497256"));
}

TEST(Binomial, BeyondTableBound) {
    const BinomialTable small(10);
    EXPECT_EQ(small(30, 12), oracle::binom(30, 12));
    EXPECT_EQ(small(600, 3), BigCount(600) * 599 * 598 / 6);
    EXPECT_EQ(binom(1000, 2), 499500);
}

TEST(Binomial, ConcurrentReaders) {
    const BinomialTable table(300);
    std::vector<std::thread> pool;
    std::vector<bool> ok(4, true);
    for (int w = 0; w < 4; ++w)
        pool.emplace_back([&, w] {
            for (long a = 299; a >= 0; a -= 3) ok[w] = ok[w] && table(a, a / 2) == binom(a, a / 2);
        });
    for (auto& t : pool) t.join();
    for (bool b : ok) EXPECT_TRUE(b);
}

TEST(Ratio, FormatAndParse) {
    EXPECT_EQ(to_string(ratio(6, 8)), "3/4");
    EXPECT_EQ(to_string(ratio(2)), "2/1");
    EXPECT_EQ(to_string(ratio(0)), "0/1");
    EXPECT_EQ(parse_ratio("1/3"), ratio(1, 3));
    EXPECT_EQ(parse_ratio("0.25"), ratio(1, 4));
    EXPECT_EQ(parse_ratio("1"), ratio(1));
    EXPECT_EQ(parse_ratio(".5"), ratio(1, 2));
    EXPECT_EQ(parse_ratio("-2/4"), ratio(-1, 2));
    EXPECT_EQ(parse_ratio("0.1"), ratio(1, 10));
    EXPECT_THROW(parse_ratio("1/0"), InvalidArgument);
    EXPECT_THROW(parse_ratio("abc"), InvalidArgument);
    EXPECT_THROW(parse_ratio(""), InvalidArgument);
    EXPECT_THROW(parse_ratio("1/"), InvalidArgument);
    EXPECT_THROW(ratio(1, 0), InvalidArgument);
}

TEST(Ratio, ArithmeticLaws) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 1000; ++i) {
        const ExactRatio x = ratio(num(rng), den(rng));
        const ExactRatio y = ratio(num(rng), den(rng));
        EXPECT_EQ((x + y) - y, x);
        EXPECT_EQ(parse_ratio(to_string(x)), x);
        using boost::multiprecision::gcd;
        EXPECT_EQ(gcd(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x)) <= 1 ||
                      boost::multiprecision::numerator(x) == 0,
                  true);
    }
}

TEST(BinomialBound, ScalingBound) {
    EXPECT_TRUE(binomial_scaling_bound(3, 6, 2).holds);
    EXPECT_EQ(binomial_scaling_bound(3, 6, 2).lhs, 3);
    EXPECT_EQ(binomial_scaling_bound(3, 6, 2).rhs, ratio(15, 4));
    EXPECT_TRUE(binomial_scaling_bound(0, 5, 0).holds);
    EXPECT_THROW(binomial_scaling_bound(4, 3, 1), InvalidArgument);
    EXPECT_THROW(binomial_scaling_bound(0, 0, 1), InvalidArgument);
}

TEST(BinomialBound, CappedSum) {
    const std::vector<std::int64_t> v{3, 3};
    const auto s = capped_sum_bound(v, 6, 2);
    EXPECT_EQ(s.lhs, 6);
    EXPECT_EQ(s.rhs, 15);
    EXPECT_TRUE(s.holds);
    const std::vector<std::int64_t> bad{7};
    EXPECT_THROW(capped_sum_bound(bad, 6, 2), InvalidArgument);
    EXPECT_THROW(capped_sum_bound(v, 6, 0), InvalidArgument);
}

TEST(BinomialBound, TransferBound) {
    // a = 1, b = 2, c = 4, r = 2: [0 + 10] - [1 + 6] = 3; (1 - 1/4) * 1 * binom(4,1) = 3.
    const auto t = binomial_transfer_bound(1, 2, 4, 2);
    EXPECT_EQ(t.lhs, 3);
    EXPECT_EQ(t.rhs, 3);
    EXPECT_TRUE(t.holds);
    // r = c + 1 stays finite.
    EXPECT_TRUE(binomial_transfer_bound(2, 3, 3, 4).holds);
    EXPECT_THROW(binomial_transfer_bound(1, 2, 4, 1), InvalidArgument);
    EXPECT_THROW(binomial_transfer_bound(3, 2, 4, 2), InvalidArgument);
}

TEST(BinomialBound, RightSideMatchesStatedForm) {
    // (a r / (c - r + 1)) binom(c, r) == a binom(c, r-1) whenever r <= c.
    for (long c = 1; c <= 30; ++c)
        for (long r = 2; r <= c; ++r)
            for (long a = 0; a <= 4; ++a)
                EXPECT_EQ(ExactRatio(BigCount(a * r), BigCount(c - r + 1)) * ExactRatio(binom(c, r)),
                          ExactRatio(BigCount(a) * binom(c, r - 1)));
}

TEST(BinomialBound, RandomTuplesHold) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> small(0, 40);
    for (int i = 0; i < 3000; ++i) {
        std::int64_t c = 1 + small(rng);
        std::int64_t b = std::uniform_int_distribution<std::int64_t>(0, c)(rng);
        std::int64_t a = std::uniform_int_distribution<std::int64_t>(0, b)(rng);
        EXPECT_TRUE(binomial_bound_check({BoundPart::scaling, a, b, c, small(rng) % 12}).holds);
        EXPECT_TRUE(binomial_bound_check({BoundPart::transfer, a, b, c, 2 + small(rng) % 12}).holds);
        BoundArgs sum{BoundPart::capped_sum};
        sum.cap = 1 + small(rng);
        sum.r = 1 + small(rng) % 8;
        for (int j = 0; j < 1 + i % 7; ++j) sum.values.push_back(std::uniform_int_distribution<std::int64_t>(0, sum.cap)(rng));
        EXPECT_TRUE(binomial_bound_check(sum).holds);
    }
}
