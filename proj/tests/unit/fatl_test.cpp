#include <gtest/gtest.h>

#include "nonreg/builtin.hpp"
#include "nonreg/error.hpp"
#include "nonreg/oracle.hpp"
#include "support.hpp"

using namespace nonreg;

TEST(FatlParse, RoundTripsCorpus) {
    for (const char* name : fixture::corpus_fatls) {
        auto m = fixture::corpus_fatl(name);
        EXPECT_EQ(fatl::parse_fatl(fatl::render_fatl(m)), m) << name;
    }
}

TEST(FatlParse, BuiltinMatchesBuilder) {
    EXPECT_EQ(fatl::parse_fatl(*builtin_example("paper-fatl")), fatl::build_paper_example());
    EXPECT_EQ(fatl::parse_fatl(*builtin_example("equal-ab-fatl")), fatl::build_equal_ab());
}

TEST(Fatl, TranslucencyIsMissingTransition) {
    auto m = fatl::build_paper_example();
    auto q0 = *m.state_index("q0");
    EXPECT_TRUE(m.translucent(q0, 'a'));
    EXPECT_FALSE(m.translucent(q0, 'b'));
    EXPECT_TRUE(m.is_deterministic());
    EXPECT_FALSE(fixture::corpus_fatl("nondet.fatl").is_deterministic());
    EXPECT_TRUE(fatl::build_equal_ab().is_deterministic());
}

TEST(Fatl, TranslucentExampleAcceptance) {
    auto m = fatl::build_paper_example();
    EXPECT_TRUE(fatl::accepts(m, "bca"));
    EXPECT_TRUE(fatl::accepts(m, "abc"));
    EXPECT_FALSE(fatl::accepts(m, "ca"));
    EXPECT_FALSE(fatl::accepts(m, "ac"));
}

TEST(Fatl, EqualCountAcceptance) {
    auto m = fatl::build_equal_ab();
    EXPECT_TRUE(fatl::accepts(m, "abba"));
    EXPECT_EQ(oracle::enumerate(m, 10), oracle::enumerate("ab", 10, oracle::equal_ab));
}

TEST(JcWord, TranslucentExampleOnABnC) {
    auto m = fatl::build_paper_example();
    EXPECT_EQ(fatl::jc_word(m, "ac"), std::nullopt);
    for (std::size_t n = 1; n <= 8; ++n) {
        std::string w = "a" + std::string(n, 'b') + "c";
        // each b jumps over the leading a, and so does the final c
        EXPECT_EQ(fatl::jc_word(m, w), n + 1) << w;
        EXPECT_EQ(oracle::brute_min_measure(m, w), n + 1) << w;
    }
}

TEST(JcWord, HeadReadsOnlyIsZero) {
    EXPECT_EQ(fatl::jc_word(fatl::build_paper_example(), "bbca"), 0u);
    EXPECT_EQ(oracle::brute_min_measure(fatl::build_paper_example(), "bca"), 0u);
}

TEST(JcWord, EqualCountOnBnAn) {
    auto m = fatl::build_equal_ab();
    for (std::size_t n = 1; n <= 6; ++n) {
        std::string w = std::string(n, 'b') + std::string(n, 'a');
        EXPECT_EQ(fatl::jc_word(m, w), n) << w;
        EXPECT_EQ(oracle::brute_min_measure(m, w), n) << w;
    }
}

TEST(JcWord, MatchesExhaustiveComputations) {
    for (const char* name : fixture::corpus_fatls) {
        auto m = fixture::corpus_fatl(name);
        oracle::for_each_word(m.alphabet, 8, [&](const std::string& w) {
            auto v = fatl::jc_word(m, w);
            ASSERT_EQ(v, oracle::brute_min_measure(m, w)) << name << " " << w;
            if (v) {
                ASSERT_LE(*v, w.size());
            }
        });
    }
}

TEST(JcWord, DeterministicMachinesHaveOneComputation) {
    for (const char* name : fixture::corpus_fatls) {
        auto m = fixture::corpus_fatl(name);
        if (!m.is_deterministic()) continue;
        oracle::for_each_word(m.alphabet, 7, [&](const std::string& w) {
            auto runs = oracle::fatl_computations(m, w);
            ASSERT_LE(runs.size(), 1u) << name << " " << w;
        });
    }
}

TEST(JcWord, TooLong) {
    EXPECT_THROW(fatl::jc_word(fatl::build_equal_ab(), std::string(fatl::max_word_length + 1, 'a')),
                 PreconditionError);
}

TEST(JcProfile, EqualCountAtLeastHalf) {
    auto p = fatl::jc_profile(fatl::build_equal_ab(), 8);
    for (std::size_t n = 2; n <= 8; n += 2) EXPECT_GE(2 * p.at(n), n) << n;
}

TEST(JcProfile, TotalDeltaAllZero) {
    for (auto [n, v] : fatl::jc_profile(fixture::corpus_fatl("even_a.fatl"), 10).entries) EXPECT_EQ(v, 0u) << n;
}

TEST(JcProfile, TranslucentExampleLinear) {
    auto p = fatl::jc_profile(fatl::build_paper_example(), 10);
    for (std::size_t n = 3; n <= 10; ++n) EXPECT_EQ(p.at(n), n - 1) << n;
}

TEST(FatlBoundedNfa, ZeroBudgetIsPlainRun) {
    for (const char* name : fixture::corpus_fatls) {
        auto m = fixture::corpus_fatl(name);
        EXPECT_TRUE(equivalent_up_to(fatl::build_bounded_nfa(m, 0), fatl::zero_jump_language(m), 12)) << name;
    }
}

TEST(FatlBoundedNfa, AgreesWithJc) {
    for (const char* name : fixture::corpus_fatls) {
        auto m = fixture::corpus_fatl(name);
        for (std::size_t c = 0; c <= 2; ++c) {
            auto b = fatl::build_bounded_nfa(m, c);
            oracle::for_each_word(m.alphabet, 9, [&](const std::string& w) {
                auto v = fatl::jc_word(m, w);
                ASSERT_EQ(b.accepts(w), v && *v <= c) << name << " " << w << " c=" << c;
            });
        }
    }
}

TEST(FatlBoundedNfa, MonotoneInBudget) {
    for (const char* name : fixture::corpus_fatls) {
        auto m = fixture::corpus_fatl(name);
        for (std::size_t c = 0; c < 3; ++c) {
            auto lo = accepted_words(fatl::build_bounded_nfa(m, c), 10);
            auto hi = accepted_words(fatl::build_bounded_nfa(m, c + 1), 10);
            EXPECT_TRUE(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end(), oracle::LengthLex{})) << name;
        }
    }
}

TEST(FatlBoundedNfa, ConstantProfileMeansRegular) {
    for (const char* name : fixture::corpus_fatls) {
        auto m = fixture::corpus_fatl(name);
        auto p = fatl::jc_profile(m, 10);
        std::size_t top = 0;
        for (auto [n, v] : p.entries) top = std::max(top, v);
        if (p.at(10) != p.at(9) || p.at(9) != p.at(8) || top > 2) continue;  // not visibly constant
        EXPECT_EQ(oracle::enumerate(fatl::build_bounded_nfa(m, top), 10), oracle::enumerate(m, 10)) << name;
    }
}

TEST(FatlZeroJump, TranslucentExample) {
    auto z = fatl::zero_jump_language(fatl::build_paper_example());
    EXPECT_TRUE(z.accepts("bca"));
    EXPECT_FALSE(z.accepts("abc"));
}

TEST(FatlZeroJump, TotalDeltaSameLanguage) {
    auto m = fixture::corpus_fatl("even_a.fatl");
    EXPECT_EQ(oracle::enumerate(fatl::zero_jump_language(m), 10), oracle::enumerate(m, 10));
}

TEST(FatlRequiresJump, Deterministic) {
    auto m = fatl::build_paper_example();
    EXPECT_TRUE(fatl::requires_jump(m, "abc"));
    EXPECT_FALSE(fatl::requires_jump(m, "bca"));
    EXPECT_FALSE(fatl::requires_jump(m, "ca"));
    EXPECT_THROW(fatl::requires_jump(fixture::corpus_fatl("nondet.fatl"), "ab"), PreconditionError);
}

TEST(FatlDecideBounded, TranslucentExample) {
    auto r = fatl::decide_jc_bounded(fatl::build_paper_example(), 3, 12);
    ASSERT_TRUE(std::holds_alternative<fatl::Counterexample>(r));
    // jc(abbbc) = 4 already
    EXPECT_EQ(std::get<fatl::Counterexample>(r).word, "abbbc");
}

TEST(FatlDecideBounded, TotalDelta) {
    auto r = fatl::decide_jc_bounded(fixture::corpus_fatl("even_a.fatl"), 0, 10);
    ASSERT_TRUE(std::holds_alternative<fatl::Bounded>(r));
}

TEST(FatlDecideBounded, EqualCount) {
    auto r = fatl::decide_jc_bounded(fatl::build_equal_ab(), 2, 10);
    ASSERT_TRUE(std::holds_alternative<fatl::Counterexample>(r));
    auto w = std::get<fatl::Counterexample>(r).word;
    EXPECT_GT(*fatl::jc_word(fatl::build_equal_ab(), w), 2u);
}

// Jumps also let q0 fetch the b from behind a leading c, and q2 fetch its
// a from behind a b: three short words outside b^n a b^m c, b^n c a.
TEST(FatlBuilders, TranslucentLanguageIsPredicatePlusThreeWords) {
    auto got = oracle::enumerate(fatl::build_paper_example(), 10);
    auto want = oracle::enumerate("abc", 10, oracle::translucent_example_language);
    std::vector<std::string> extra, missing;
    std::set_difference(got.words.begin(), got.words.end(), want.words.begin(), want.words.end(),
                        std::back_inserter(extra), oracle::LengthLex{});
    std::set_difference(want.words.begin(), want.words.end(), got.words.begin(), got.words.end(),
                        std::back_inserter(missing), oracle::LengthLex{});
    EXPECT_EQ(extra, (std::vector<std::string>{"acb", "cab", "cba"}));
    EXPECT_TRUE(missing.empty());
}
