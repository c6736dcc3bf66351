#include <gtest/gtest.h>

#include "nonreg/dnreg.hpp"
#include "nonreg/error.hpp"
#include "nonreg/oracle.hpp"
#include "support.hpp"

using namespace nonreg;

namespace {

cfg::Grammar anbn() { return cfg::parse_grammar("start: S\nS -> a S b | a b\n"); }

} // namespace

TEST(DnregWord, Anbn) {
    auto g = cfg::normalize(anbn());
    EXPECT_EQ(dnreg::word_degree(g, "aabb"), 1u);
    EXPECT_EQ(dnreg::word_degree(g, "ab"), 0u);
    EXPECT_EQ(dnreg::word_degree(g, "aab"), std::nullopt);
}

TEST(DnregWord, RightLinearIsZero) {
    auto g = cfg::normalize(fixture::corpus_grammar("right_linear.cfg"));
    for (const auto& w : oracle::enumerate(g, 7).words) EXPECT_EQ(dnreg::word_degree(g, w), 0u) << w;
}

TEST(DnregWord, LeastDerivationReplays) {
    auto g = cfg::normalize(fixture::corpus_grammar("palindromes.cfg"));
    for (const auto& w : oracle::enumerate(g, 7).words) {
        auto d = dnreg::least_derivation(g, w);
        ASSERT_TRUE(d) << w;
        EXPECT_EQ(dnreg::replay(g, *d), w);
        EXPECT_EQ(dnreg::non_regular_steps(g, *d), *dnreg::word_degree(g, w));
    }
}

TEST(DnregWord, MatchesExhaustiveDerivations) {
    for (const char* name : fixture::corpus_grammars) {
        auto g = cfg::normalize(fixture::corpus_grammar(name));
        oracle::for_each_word(g.terminals, 7, [&](const std::string& w) {
            if (w.empty()) return;
            ASSERT_EQ(dnreg::word_degree(g, w), oracle::brute_min_measure(g, w)) << name << " " << w;
        });
    }
}

TEST(DnregWord, AtMostLength) {
    for (const char* name : fixture::corpus_grammars) {
        auto g = dnreg::canonical_form(fixture::corpus_grammar(name));
        for (const auto& w : oracle::enumerate(g, 9).words) EXPECT_LE(*dnreg::word_degree(g, w), w.size());
    }
}

TEST(DnregProfile, Anbn) {
    auto p = dnreg::profile(cfg::normalize(anbn()), 8);
    EXPECT_EQ(p.exhaustive_up_to, 8u);
    std::map<std::size_t, std::size_t> want{{1, 0}, {2, 0}, {3, 0}, {4, 1}, {5, 0}, {6, 2}, {7, 0}, {8, 3}};
    EXPECT_EQ(p.entries, want);
}

TEST(DnregProfile, RightLinearAllZero) {
    auto p = dnreg::profile(cfg::normalize(fixture::corpus_grammar("right_linear.cfg")), 9);
    for (auto [n, v] : p.entries) EXPECT_EQ(v, 0u) << n;
}

TEST(DnregProfile, UnionWithRegularRulesOnlyLowers) {
    auto base = dnreg::profile(cfg::normalize(anbn()), 10);
    auto uni = dnreg::profile(cfg::normalize(fixture::corpus_grammar("anbn_union_regular.cfg")), 10);
    for (std::size_t n = 1; n <= 10; ++n) EXPECT_LE(uni.at(n), base.at(n)) << n;
}

TEST(DnregProfile, AnbnGrowsLinearly) {
    auto p = dnreg::profile(dnreg::canonical_form(anbn()), 16);
    for (std::size_t n = 2; n <= 16; n += 2) EXPECT_GE(p.at(n), n / 4) << n;
}

TEST(DnregBoundedNfa, AnbnBudgetTwo) {
    auto q = dnreg::canonical_form(anbn());
    auto b = dnreg::build_bounded_nfa(q, 2);
    EXPECT_EQ(accepted_words(b.nfa, 12), (std::vector<std::string>{"ab", "aabb", "aaabbb"}));
}

TEST(DnregBoundedNfa, RightLinearBudgetZero) {
    auto q = dnreg::canonical_form(fixture::corpus_grammar("right_linear.cfg"));
    auto b = dnreg::build_bounded_nfa(q, 0);
    EXPECT_EQ(oracle::enumerate(b.nfa, 9), oracle::enumerate(q, 9));
}

TEST(DnregBoundedNfa, StateCountWithinBound) {
    for (const char* name : fixture::corpus_grammars) {
        auto q = dnreg::canonical_form(fixture::corpus_grammar(name));
        for (std::size_t c = 0; c <= 3; ++c) {
            auto b = dnreg::build_bounded_nfa(q, c);
            EXPECT_LE(b.nfa.size(), dnreg::bounded_nfa_state_bound(q.nonterminals.size(), c)) << name << " c=" << c;
            for (const auto& l : b.labels) EXPECT_LE(l.pending.size(), c + 1);
        }
    }
}

TEST(DnregBoundedNfa, NeedsQuasiChomsky) {
    EXPECT_THROW(dnreg::build_bounded_nfa(anbn(), 1), PreconditionError);
}

TEST(DnregBoundedNfa, MonotoneInBudget) {
    for (const char* name : fixture::corpus_grammars) {
        auto q = dnreg::canonical_form(fixture::corpus_grammar(name));
        for (std::size_t c = 0; c < 3; ++c) {
            auto lo = dnreg::build_bounded_nfa(q, c).nfa;
            auto hi = dnreg::build_bounded_nfa(q, c + 1).nfa;
            EXPECT_TRUE(is_empty(product_intersect(lo, complement_of(hi, q.terminals)))) << name << " c=" << c;
        }
    }
}

TEST(DnregBoundedNfa, AgreesWithDegreeAndRecognizer) {
    for (const char* name : fixture::corpus_grammars) {
        auto q = dnreg::canonical_form(fixture::corpus_grammar(name));
        for (std::size_t c = 0; c <= 2; ++c) {
            auto b = dnreg::build_bounded_nfa(q, c).nfa;
            oracle::for_each_word(q.terminals, 8, [&](const std::string& w) {
                if (w.empty()) return;
                auto d = dnreg::word_degree(q, w);
                bool in = d && *d <= c;
                ASSERT_EQ(b.accepts(w), in) << name << " " << w << " c=" << c;
                ASSERT_EQ(dnreg::bounded_recognizer(q, w, c).accepted, in) << name << " " << w << " c=" << c;
            });
        }
    }
}

TEST(DnregDecideBounded, AnbnUnbounded) {
    auto r = dnreg::decide_bounded(anbn(), 3);
    ASSERT_TRUE(std::holds_alternative<dnreg::Unbounded>(r));
    EXPECT_EQ(std::get<dnreg::Unbounded>(r).witness, "aaaaabbbbb");
}

TEST(DnregDecideBounded, RightLinearBounded) {
    EXPECT_TRUE(std::holds_alternative<dnreg::Bounded>(
        dnreg::decide_bounded(fixture::corpus_grammar("right_linear.cfg"), 0)));
}

TEST(DnregDecideBounded, RegularRulesCoverEverything) {
    auto g = fixture::corpus_grammar("anbn_union_regular.cfg");
    EXPECT_TRUE(std::holds_alternative<dnreg::Bounded>(dnreg::decide_bounded(g, 0)));
    auto q = dnreg::canonical_form(g);
    oracle::for_each_word("ab", 12, [&](const std::string& w) {
        if (!w.empty()) {
            ASSERT_EQ(dnreg::word_degree(q, w), 0u) << w;
        }
    });
}

TEST(DnregRecognizer, Anbn) {
    auto q = dnreg::canonical_form(anbn());
    EXPECT_TRUE(dnreg::bounded_recognizer(q, "aaabbb", 2).accepted);
    EXPECT_FALSE(dnreg::bounded_recognizer(q, "aaabbb", 1).accepted);
    EXPECT_THROW(dnreg::bounded_recognizer(q, "abc", 1), AlphabetError);
}

TEST(DnregRecognizer, VisitsWithinBound) {
    auto q = dnreg::canonical_form(anbn());
    const std::size_t p = q.nonterminals.size();
    for (std::size_t n = 0; n <= 20; ++n) {
        std::string w = std::string(n / 2, 'a') + std::string(n - n / 2, 'b');
        for (std::size_t d = 0; d <= 4; ++d) {
            EXPECT_LE(dnreg::bounded_recognizer(q, w, d).visited, dnreg::recognizer_visit_bound(n, p, d));
        }
    }
}
