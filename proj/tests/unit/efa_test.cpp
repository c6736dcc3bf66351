#include <gtest/gtest.h>

#include "nonreg/builtin.hpp"
#include "nonreg/error.hpp"
#include "nonreg/oracle.hpp"
#include "support.hpp"

using namespace nonreg;

namespace {

bool anbn_word(std::string_view w) {
    auto n = w.size() / 2;
    return n > 0 && w.size() % 2 == 0 && w == std::string(n, 'a') + std::string(n, 'b');
}

} // namespace

TEST(EfaParse, RoundTripsCorpus) {
    for (const char* name : fixture::corpus_efas) {
        auto a = fixture::corpus_efa(name);
        auto b = efa::parse_efa(efa::render_efa(a));
        EXPECT_EQ(efa::render_efa(b), efa::render_efa(a)) << name;
    }
}

TEST(EfaParse, SqrtExampleGroup) {
    auto a = efa::parse_efa(*builtin_example("sqrt-efa"));
    EXPECT_EQ(group::render_spec(*a.group), "Z^1 x Zmod 2");
    // the Zmod 2 entry is really used
    bool flips = false;
    for (const auto& t : a.transitions) flips |= std::get<std::int64_t>(t.label.parts()[1]) != 0;
    EXPECT_TRUE(flips);
}

TEST(EfaParse, LabelMustMatchGroup) {
    EXPECT_THROW(efa::parse_efa("group: Z^1\nstart: s\nfinal: s\ns a s [1,1]\n"), ParseError);
}

TEST(Efa, AnbnAcceptance) {
    auto a = efa::build_anbn_efa();
    EXPECT_TRUE(efa::accepts(a, "aabb"));
    EXPECT_FALSE(efa::accepts(a, "abab"));
    EXPECT_EQ(oracle::enumerate(a, 10), oracle::enumerate("ab", 10, anbn_word));
}

TEST(Efa, SqrtMatchesPredicate) {
    EXPECT_EQ(oracle::enumerate(efa::build_sqrt_efa(), 10), oracle::enumerate("abc", 10, oracle::sqrt_language));
    // one block: i_1 = 2 > 1 gives m = 1; i_1 = 1 is excluded
    EXPECT_TRUE(oracle::sqrt_language("baabc"));
    EXPECT_TRUE(efa::accepts(efa::build_sqrt_efa(), "baabc"));
    EXPECT_FALSE(oracle::sqrt_language("babc"));
    EXPECT_FALSE(efa::accepts(efa::build_sqrt_efa(), "babc"));
}

TEST(GmcWord, Examples) {
    EXPECT_EQ(efa::gmc_word(efa::build_anbn_efa(), "aaabbb"), 6u);
    EXPECT_EQ(efa::gmc_word(efa::build_anbn_efa(), "aab"), std::nullopt);
    EXPECT_EQ(efa::gmc_word(fixture::corpus_efa("ab_identity.efa"), "abab"), 0u);
}

TEST(GmcWord, MatchesExhaustiveRuns) {
    for (const char* name : fixture::corpus_efas) {
        auto a = fixture::corpus_efa(name);
        oracle::for_each_word(a.alphabet, 8, [&](const std::string& w) {
            auto v = efa::gmc_word(a, w);
            ASSERT_EQ(v, oracle::brute_min_measure(a, w)) << name << " " << w;
            if (v) {
                ASSERT_LE(*v, w.size());
            }
        });
    }
}

TEST(GmcProfile, Anbn) {
    auto p = efa::gmc_profile(efa::build_anbn_efa(), 10);
    for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(p.at(n), n % 2 ? 0 : n) << n;
}

TEST(GmcProfile, IdentityOnlyAllZero) {
    for (auto [n, v] : efa::gmc_profile(fixture::corpus_efa("ab_identity.efa"), 12).entries) EXPECT_EQ(v, 0u) << n;
}

TEST(GmcProfile, MatchesWordEnumeration) {
    for (const char* name : fixture::corpus_efas) {
        auto a = fixture::corpus_efa(name);
        auto p = efa::gmc_profile(a, 8);
        EXPECT_EQ(p, oracle::brute_profile(a, a.alphabet, 8)) << name;
        for (auto [n, v] : p.entries) EXPECT_LE(v, n);
    }
}

TEST(GmcProfile, CapIsEnforced) {
    EXPECT_THROW(efa::gmc_profile(efa::build_sqrt_efa(), 16, 8), BudgetExceeded);
}

TEST(GmcLowerProfile, BelowExactAndAttained) {
    auto a = efa::build_sqrt_efa();
    auto exact = efa::gmc_profile(a, 14);
    auto lo = efa::gmc_lower_profile(a, 14, 16);
    for (std::size_t n = 1; n <= 14; ++n) {
        EXPECT_LE(lo.at(n), exact.at(n)) << n;
        if (n <= lo.exhaustive_up_to) {
            EXPECT_EQ(lo.at(n), exact.at(n)) << n;
        }
    }
    EXPECT_EQ(efa::gmc_lower_profile(a, 14, 1 << 20), exact);
}

TEST(EfaBoundedNfa, AnbnBudgetFour) {
    auto b = efa::build_bounded_nfa(efa::build_anbn_efa(), 4);
    EXPECT_EQ(accepted_words(b.nfa, 12), (std::vector<std::string>{"ab", "aabb"}));
}

TEST(EfaBoundedNfa, BudgetZeroUsesIdentityMovesOnly) {
    for (const char* name : fixture::corpus_efas) {
        auto a = fixture::corpus_efa(name);
        auto b = efa::build_bounded_nfa(a, 0);
        oracle::for_each_word(a.alphabet, 7, [&](const std::string& w) {
            auto v = efa::gmc_word(a, w);
            ASSERT_EQ(b.nfa.accepts(w), v && *v == 0) << name << " " << w;
        });
    }
}

TEST(EfaBoundedNfa, RegisterValuesWithinBound) {
    for (const char* name : fixture::corpus_efas) {
        auto a = fixture::corpus_efa(name);
        for (std::size_t c = 0; c <= 3; ++c) {
            auto b = efa::build_bounded_nfa(a, c);
            std::size_t bound = 0, pw = 1;
            for (std::size_t i = 0; i <= c; ++i, pw *= b.distinct_labels) bound += pw;
            EXPECT_LE(b.register_values, bound) << name << " c=" << c;
        }
    }
}

TEST(EfaBoundedNfa, AgreesWithGmcWord) {
    for (const char* name : fixture::corpus_efas) {
        auto a = fixture::corpus_efa(name);
        for (std::size_t c = 0; c <= 3; ++c) {
            auto b = efa::build_bounded_nfa(a, c);
            oracle::for_each_word(a.alphabet, 9, [&](const std::string& w) {
                auto v = efa::gmc_word(a, w);
                ASSERT_EQ(b.nfa.accepts(w), v && *v <= c) << name << " " << w << " c=" << c;
            });
        }
    }
}

// Over Zmod 3 the register takes three values whatever the budget. The
// language still grows with c here, since every a and b costs one step.
TEST(EfaBoundedNfa, FiniteGroupKeepsRegisterFinite) {
    auto a = fixture::corpus_efa("mod3.efa");
    for (std::size_t c = 0; c <= 8; ++c) {
        auto b = efa::build_bounded_nfa(a, c);
        EXPECT_LE(b.register_values, 3u);
        EXPECT_LE(b.nfa.size(), a.states.size() * 3 * (c + 1));
    }
    EXPECT_FALSE(efa::build_bounded_nfa(a, 5).nfa.accepts("aaabbbc"));
    EXPECT_TRUE(efa::build_bounded_nfa(a, 6).nfa.accepts("aaabbbc"));
}

TEST(EfaCheckBounded, Anbn) {
    auto r = efa::check_gmc_bounded(efa::build_anbn_efa(), 4, 12);
    ASSERT_TRUE(std::holds_alternative<efa::Counterexample>(r));
    EXPECT_EQ(std::get<efa::Counterexample>(r).word, "aaabbb");
}

TEST(EfaCheckBounded, IdentityOnly) {
    auto r = efa::check_gmc_bounded(fixture::corpus_efa("ab_identity.efa"), 0, 12);
    ASSERT_TRUE(std::holds_alternative<efa::Bounded>(r));
    EXPECT_EQ(std::get<efa::Bounded>(r).up_to, 12u);
}

TEST(EfaCheckBounded, SqrtExampleHasCounterexample) {
    auto r = efa::check_gmc_bounded(efa::build_sqrt_efa(), 3, 20);
    ASSERT_TRUE(std::holds_alternative<efa::Counterexample>(r));
    auto w = std::get<efa::Counterexample>(r).word;
    EXPECT_TRUE(oracle::sqrt_language(w));
    EXPECT_GT(*efa::gmc_word(efa::build_sqrt_efa(), w), 3u);
}

TEST(EfaCheckBounded, TinyWorkCapIsUnknown) {
    auto r = efa::check_gmc_bounded(efa::build_sqrt_efa(), 3, 20, 4);
    EXPECT_TRUE(std::holds_alternative<efa::Unknown>(r));
}
