#include <gtest/gtest.h>

#include "nonreg/builtin.hpp"
#include "nonreg/error.hpp"
#include "nonreg/oracle.hpp"
#include "support.hpp"

using namespace nonreg;
using pda::Mode;
using pda::MoveKind;

TEST(PdaParse, RoundTripsCorpus) {
    for (const char* name : fixture::corpus_pdas) {
        auto p = fixture::corpus_pda(name);
        EXPECT_EQ(pda::parse_pda(pda::render_pda(p)), p) << name;
    }
}

TEST(PdaParse, RejectsLongStackWords) {
    EXPECT_THROW(pda::parse_pda("mode: empty-stack\nstart: q\nstack-start: Z\nfinal:\nq a Z -> q AAAAAAAAZ\n"),
                 ParseError);
    EXPECT_NO_THROW(pda::parse_pda("mode: empty-stack\nstart: q\nstack-start: Z\nfinal:\nq a Z -> q AAAAAAAZ\n"));
}

TEST(PdaParse, RejectsUppercaseInput) {
    EXPECT_THROW(pda::parse_pda("mode: empty-stack\nstart: q\nstack-start: Z\nfinal:\nq A Z -> q _\n"), ParseError);
}

TEST(Pda, MoveKindsPartition) {
    for (const char* name : fixture::corpus_pdas) {
        for (const auto& t : fixture::corpus_pda(name).transitions) {
            auto k = pda::classify(t);
            EXPECT_EQ(k == MoveKind::Push, t.write.size() >= 2);
            EXPECT_EQ(k == MoveKind::Pop, t.write.empty());
            EXPECT_EQ(k == MoveKind::Neutral, t.write.size() == 1);
        }
    }
}

TEST(Pda, AnbnAcceptance) {
    auto p = fixture::corpus_pda("anbn.pda");
    EXPECT_TRUE(pda::accepts(p, "aabb"));
    EXPECT_FALSE(pda::accepts(p, "abb"));
    EXPECT_FALSE(pda::accepts(p, "abab"));
    auto s = oracle::enumerate(p, 10);
    EXPECT_EQ(s, oracle::enumerate("ab", 10, [](std::string_view w) {
                  auto n = w.size() / 2;
                  return n > 0 && w.size() % 2 == 0 && w == std::string(n, 'a') + std::string(n, 'b');
              }));
}

TEST(Pda, EmptyWordWhenStartAccepts) {
    auto p = fixture::corpus_pda("ab_star.pda");
    EXPECT_TRUE(pda::accepts(p, ""));
}

TEST(PushWord, Anbn) {
    auto p = fixture::corpus_pda("anbn.pda");
    EXPECT_EQ(pda::push_word(p, "aaabbb"), 3u);
    EXPECT_EQ(pda::push_word(p, "aab"), std::nullopt);
}

TEST(PushWord, NeutralOnlyIsZero) {
    auto p = fixture::corpus_pda("ab_star.pda");
    EXPECT_EQ(pda::push_word(p, "ababab"), 0u);
}

TEST(PushWord, MatchesExhaustiveComputations) {
    for (const char* name : fixture::corpus_pdas) {
        auto p = fixture::corpus_pda(name);
        oracle::for_each_word(p.input_alphabet, 8, [&](const std::string& w) {
            ASSERT_EQ(pda::push_word(p, w), oracle::brute_min_measure(p, w)) << name << " " << w;
        });
    }
}

TEST(PushProfile, Anbn) {
    auto prof = pda::push_profile(fixture::corpus_pda("anbn.pda"), 8);
    std::map<std::size_t, std::size_t> want{{1, 0}, {2, 1}, {3, 0}, {4, 2}, {5, 0}, {6, 3}, {7, 0}, {8, 4}};
    EXPECT_EQ(prof.entries, want);
}

TEST(PushProfile, NeutralOnlyAllZero) {
    for (auto [n, v] : pda::push_profile(fixture::corpus_pda("ab_star.pda"), 10).entries) EXPECT_EQ(v, 0u) << n;
}

TEST(PushProfile, AtMostLength) {
    for (const char* name : fixture::corpus_pdas) {
        for (auto [n, v] : pda::push_profile(fixture::corpus_pda(name), 9).entries) EXPECT_LE(v, n) << name;
    }
}

TEST(ConvertMode, RoundTripsPreserveLanguage) {
    for (const char* name : fixture::corpus_pdas) {
        auto p = fixture::corpus_pda(name);
        auto ref = oracle::enumerate(p, 10);
        auto es = pda::convert_mode(p, Mode::EmptyStack);
        auto fs = pda::convert_mode(p, Mode::FinalState);
        EXPECT_EQ(es.mode, Mode::EmptyStack);
        EXPECT_EQ(fs.mode, Mode::FinalState);
        EXPECT_EQ(oracle::enumerate(es, 10), ref) << name;
        EXPECT_EQ(oracle::enumerate(fs, 10), ref) << name;
        EXPECT_EQ(oracle::enumerate(pda::convert_mode(es, Mode::FinalState), 10), ref) << name;
        EXPECT_EQ(oracle::enumerate(pda::convert_mode(fs, Mode::EmptyStack), 10), ref) << name;
    }
}

TEST(ConvertMode, SameModeStillRewrites) {
    auto p = fixture::corpus_pda("anbn.pda");
    auto q = pda::convert_mode(p, Mode::EmptyStack);
    EXPECT_NE(q, p);
    EXPECT_EQ(oracle::enumerate(q, 10), oracle::enumerate(p, 10));
}

TEST(ConvertMode, PushProfileWithinOne) {
    for (const char* name : fixture::corpus_pdas) {
        auto p = fixture::corpus_pda(name);
        auto base = pda::push_profile(p, 10);
        for (Mode m : {Mode::EmptyStack, Mode::FinalState}) {
            auto conv = pda::push_profile(pda::convert_mode(p, m), 10);
            for (std::size_t n = 1; n <= 10; ++n) {
                auto a = base.at(n), b = conv.at(n);
                EXPECT_LE(a > b ? a - b : b - a, 1u) << name << " n=" << n;
            }
        }
    }
}

TEST(ConvertMode, ConvertedMachineParses) {
    auto p = pda::parse_pda(*builtin_example("anbn-pda"));
    for (Mode m : {Mode::EmptyStack, Mode::FinalState}) {
        auto q = pda::convert_mode(p, m);
        EXPECT_EQ(pda::parse_pda(pda::render_pda(q)), q);
    }
}
