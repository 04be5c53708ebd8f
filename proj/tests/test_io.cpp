#include <sstream>

#include <gtest/gtest.h>

#include "ekr/io.hpp"

using namespace ekr;

namespace {

std::size_t parse_error_line(const std::string& text) {
    try {
        parse_family(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(Fam, RoundTrip) {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k <= 3 && k <= n; ++k)
            for (std::size_t m = 0; m <= small_binom(n, k); m += 3) {
                const SetFamily lex = lex_segment(n, k, m);
                EXPECT_EQ(parse_family(format_family(lex)), lex);
                const SetFamily colex = colex_segment(n, k, m);
                EXPECT_EQ(parse_family(format_family(colex)), colex);
            }
}

TEST(Fam, Format) {
    EXPECT_EQ(format_family(make_family(4, 2, {{3, 4}, {1, 2}})), "4 2 2\n1 2\n3 4\n");
    EXPECT_EQ(format_family(SetFamily(3, 1, {})), "3 1 0\n");
}

TEST(Fam, AcceptsTrailingBlankLines) {
    EXPECT_EQ(parse_family("3 2 1\n1 2\n\n  \n").size(), 1u);
}

TEST(Fam, LineNumberedErrors) {
    EXPECT_EQ(parse_error_line(""), 1u);
    EXPECT_EQ(parse_error_line("3 2\n"), 1u);
    EXPECT_EQ(parse_error_line("3 x 1\n1 2\n"), 1u);
    EXPECT_EQ(parse_error_line("3 2 4\n"), 1u);
    EXPECT_EQ(parse_error_line("3 2 2\n1 2\n2 1\n"), 3u);
    EXPECT_EQ(parse_error_line("3 2 2\n1 2\n1 4\n"), 3u);
    EXPECT_EQ(parse_error_line("3 2 2\n1 2\n1 2\n"), 3u);
    EXPECT_EQ(parse_error_line("3 2 2\n1 2 3\n"), 2u);
    EXPECT_EQ(parse_error_line("3 2 2\n1 2\n"), 3u);
    EXPECT_EQ(parse_error_line("3 2 1\n1 2\n2 3\n"), 3u);
}

TEST(Csv, Profile) {
    std::ostringstream out;
    write_profile_csv(out, inter_profile(make_family(4, 2, {{1, 2}, {2, 3}, {3, 4}})));
    EXPECT_EQ(out.str(), "t,count\n0,1\n1,3\n2,2\n3,0\n");
}

TEST(Csv, Split) {
    std::ostringstream out;
    write_split_csv(out, profile_split(make_family(3, 2, {{1, 2}, {1, 3}, {2, 3}})));
    EXPECT_EQ(out.str(), "t,trivial,nontrivial\n0,1,0\n1,3,0\n2,3,0\n3,0,1\n");
}

TEST(Csv, Verification) {
    std::ostringstream out;
    write_verification_csv(out, verify_ahlswede_katona(3));
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "m,t,max,lex,colex,lex_optimal,colex_optimal");
    EXPECT_NE(out.str().find("0,2,0,0,0,true,true"), std::string::npos);
}

TEST(Json, Probability) {
    const auto j = prob_json(ratio(1, 3), ratio(8, 9), 0.888L);
    EXPECT_EQ(j["p"], "1/3");
    EXPECT_EQ(j["exact"], "8/9");
    EXPECT_TRUE(j["mc"].is_null());
    McEstimate e{10, 9, 0.9, 0.6, 0.98, 5};
    const auto k = prob_json(ratio(1, 3), ratio(8, 9), 0.888L, &e);
    EXPECT_EQ(k["mc"]["hits"], 9);
    EXPECT_EQ(k["mc"]["seed"], 5);
}

TEST(Json, Report) {
    const auto r = exhaustive_search(4, 2, 3, Objective::inter(2));
    const auto j = report_json(r);
    EXPECT_EQ(j["best_value"], "3/1");
    EXPECT_EQ(j["maximizers"].size(), 2u);
    EXPECT_EQ(parse_family(j["maximizers"][0].get<std::string>()).size(), 3u);
}
