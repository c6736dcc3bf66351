#include <gtest/gtest.h>

#include <cmath>

#include "nonreg/error.hpp"
#include "nonreg/dnreg.hpp"
#include "nonreg/oracle.hpp"
#include "support.hpp"

using namespace nonreg;
using oracle::Family;

namespace {

cfg::Grammar anbn() { return cfg::parse_grammar("start: S\nS -> a S b | a b\n"); }

Profile make_profile(std::size_t n_max, double (*f)(double)) {
    Profile p;
    for (std::size_t n = 1; n <= n_max; ++n) p.entries[n] = static_cast<std::size_t>(std::lround(f(n)));
    p.exhaustive_up_to = n_max;
    return p;
}

} // namespace

TEST(Enumerate, AnbnGrammar) {
    EXPECT_EQ(oracle::enumerate(anbn(), 6).words, (std::set<std::string, oracle::LengthLex>{"ab", "aabb", "aaabbb"}));
}

TEST(Enumerate, NullableStartRejected) {
    EXPECT_THROW(oracle::enumerate(cfg::parse_grammar("start: S\nS -> a S | _\n"), 3), PreconditionError);
}

TEST(Enumerate, PredicateSlice) {
    auto s = oracle::enumerate("abc", 8, oracle::sqrt_language);
    EXPECT_TRUE(s.contains("baabc"));  // i_1 = 2 > 1, m = 1
    EXPECT_FALSE(s.contains("babc"));  // i_1 = 1
    EXPECT_TRUE(s.contains("bbc"));    // i_1 = 0, m = 1 - 0
    EXPECT_TRUE(s.contains("bbabc"));  // i_1 = 0 already qualifies
    EXPECT_FALSE(s.contains("bbac"));  // blocks end with b
}

TEST(Enumerate, AgreesWithDeviceMembership) {
    for (const char* name : fixture::corpus_pdas) {
        auto p = fixture::corpus_pda(name);
        auto s = oracle::enumerate(p, 8);
        oracle::for_each_word(p.input_alphabet, 8, [&](const std::string& w) {
            ASSERT_EQ(s.contains(w), pda::accepts(p, w)) << name << " " << w;
        });
    }
    for (const char* name : fixture::corpus_grammars) {
        auto g = dnreg::canonical_form(fixture::corpus_grammar(name));
        auto s = oracle::enumerate(g, 8);
        oracle::for_each_word(g.terminals, 8, [&](const std::string& w) {
            if (!w.empty()) {
                ASSERT_EQ(s.contains(w), dnreg::word_degree(g, w).has_value()) << name << " " << w;
            }
        });
    }
}

TEST(Slice, SerializeRoundTrip) {
    auto s = oracle::enumerate(fixture::corpus_pda("ab_star.pda"), 6);
    auto text = oracle::serialize(s);
    EXPECT_EQ(text.substr(0, 2), "_\n");
    EXPECT_EQ(oracle::parse_slice(text, 6), s);
}

TEST(ForEachWord, OrderAndCap) {
    std::vector<std::string> seen;
    oracle::for_each_word("ab", 2, [&](const std::string& w) { seen.push_back(w); });
    EXPECT_EQ(seen, (std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"}));
    EXPECT_THROW(oracle::for_each_word("ab", 20, [](const std::string&) {}, 100), BudgetExceeded);
}

TEST(BruteMeasure, Examples) {
    EXPECT_EQ(oracle::brute_min_measure(cfg::normalize(anbn()), "aaabbb"), 2u);
    EXPECT_EQ(oracle::brute_min_measure(efa::build_anbn_efa(), "aabb"), 4u);
    EXPECT_EQ(oracle::brute_min_measure(fatl::build_paper_example(), "bca"), 0u);
}

TEST(Intersect, WithAStarBStar) {
    Nfa n("ab");
    auto p = n.add_state(true), q = n.add_state(true);
    n.add_initial(p);
    n.add_transition(p, 'a', p);
    n.add_transition(p, 'b', q);
    n.add_transition(q, 'b', q);
    auto g = oracle::intersect_grammar_nfa(anbn(), n);
    EXPECT_EQ(oracle::enumerate(cfg::normalize(g), 8), oracle::enumerate(anbn(), 8));
}

TEST(Intersect, WithAStarIsEmpty) {
    Nfa n("ab");
    auto p = n.add_state(true);
    n.add_initial(p);
    n.add_transition(p, 'a', p);
    EXPECT_TRUE(std::holds_alternative<oracle::Empty>(oracle::cfg_emptiness(oracle::intersect_grammar_nfa(anbn(), n))));
}

TEST(Intersect, UniversalKeepsLanguage) {
    for (const char* name : fixture::corpus_grammars) {
        auto g = fixture::corpus_grammar(name);
        Nfa n(g.terminals);
        auto p = n.add_state(true);
        n.add_initial(p);
        for (char c : g.terminals) n.add_transition(p, c, p);
        auto i = oracle::intersect_grammar_nfa(g, n);
        EXPECT_EQ(oracle::enumerate(cfg::normalize(i), 8), oracle::enumerate(g, 8)) << name;
    }
}

TEST(Emptiness, Witnesses) {
    auto r = oracle::cfg_emptiness(anbn());
    ASSERT_TRUE(std::holds_alternative<oracle::NonEmpty>(r));
    EXPECT_EQ(std::get<oracle::NonEmpty>(r).witness, "ab");
    EXPECT_TRUE(std::holds_alternative<oracle::Empty>(oracle::cfg_emptiness(cfg::parse_grammar("start: S\nS -> a S\n"))));
}

TEST(GrowthFit, AllZeroConstant) {
    auto f = oracle::growth_fit(make_profile(10, [](double) { return 0.0; }), Family::Constant);
    EXPECT_EQ(f.constant, 0.0);
    EXPECT_TRUE(f.consistent);
}

TEST(GrowthFit, IdentityLinear) {
    auto f = oracle::growth_fit(make_profile(20, [](double n) { return n; }), Family::Linear);
    EXPECT_NEAR(f.constant, 1.0, 1e-9);
    EXPECT_TRUE(f.consistent);
    EXPECT_EQ(f.verdict, "consistent with O(linear) at measured scale");
}

TEST(GrowthFit, LinearIsNotSqrt) {
    auto f = oracle::growth_fit(make_profile(60, [](double n) { return n; }), Family::Sqrt);
    EXPECT_FALSE(f.consistent);
}

TEST(GrowthFit, SqrtIsSqrt) {
    auto f = oracle::growth_fit(make_profile(60, [](double n) { return 3 * std::sqrt(n); }), Family::Sqrt);
    EXPECT_TRUE(f.consistent);
    EXPECT_NEAR(f.constant, 3.0, 0.1);
}

TEST(GrowthFit, ScalingKeepsVerdict) {
    auto base = make_profile(30, [](double n) { return 2 * std::log(n + 1); });
    auto scaled = base;
    for (auto& [n, v] : scaled.entries) v *= 5;
    for (Family fam : {Family::Constant, Family::Log, Family::Sqrt, Family::Linear}) {
        auto a = oracle::growth_fit(base, fam), b = oracle::growth_fit(scaled, fam);
        EXPECT_NEAR(b.constant, 5 * a.constant, 1e-9 * (1 + b.constant));
        EXPECT_EQ(a.verdict, b.verdict);
    }
}

TEST(GrowthFit, TooFewPoints) {
    EXPECT_THROW(oracle::growth_fit(make_profile(5, [](double n) { return n; }), Family::Linear), PreconditionError);
}

TEST(GrowthFit, FamilyNames) {
    for (Family fam : {Family::Constant, Family::Log, Family::Sqrt, Family::Linear}) {
        EXPECT_EQ(oracle::parse_family(oracle::family_name(fam)), fam);
    }
    EXPECT_EQ(oracle::parse_family("cubic"), std::nullopt);
}
