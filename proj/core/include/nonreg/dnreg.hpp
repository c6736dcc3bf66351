#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nonreg/grammar.hpp"
#include "nonreg/nfa.hpp"
#include "nonreg/profile.hpp"

namespace nonreg::dnreg {

/// A leftmost derivation. Each step rewrites the leftmost nonterminal, which
/// sits at `position` in the current sentential form.
struct Derivation {
    struct Step {
        std::size_t rule;      // index into Grammar::rules
        std::size_t position;  // index of the rewritten nonterminal
        bool operator==(const Step&) const = default;
    };
    std::vector<Step> steps;
    std::string word;
};

/// Replays a derivation from the start symbol; returns the derived word.
/// Throws PreconditionError if a step does not fit the sentential form.
std::string replay(const cfg::Grammar& g, const Derivation& d);

/// Number of non-regular rule applications in `d`.
std::size_t non_regular_steps(const cfg::Grammar& g, const Derivation& d);

/// A derivation of `w` with the fewest non-regular steps (uniform-cost
/// search over leftmost sentential forms). Absent when w is not in L(g).
/// Pre: g reduced and proper.
std::optional<Derivation> least_derivation(const cfg::Grammar& g, std::string_view w);

/// Degree of non-regularity of `w`; absent when w is not in L(g).
/// Pre: g reduced and proper.
std::optional<std::size_t> word_degree(const cfg::Grammar& g, std::string_view w);

/// Per-length maxima of word_degree over all words of length 1..n_max.
/// Throws BudgetExceeded if a length has more than `cap` words.
Profile profile(const cfg::Grammar& g, std::size_t n_max,
                std::size_t cap = default_enumeration_cap);

/// reduce, make proper, quasi normal form, quasi Chomsky normal form. The
/// first three keep the degree of every word; binarization may multiply it
/// by up to k-1 where k is the longest nonterminal right-hand side.
cfg::Grammar canonical_form(const cfg::Grammar& g);

/// Finite automaton for L(g, <=c): states are (pending nonterminals, budget).
struct BudgetNfa {
    struct Label {
        std::vector<std::string> pending;  // head first
        std::size_t budget;
    };
    Nfa nfa;
    std::vector<Label> labels;  // per NFA state
};

/// Pre: g in quasi Chomsky normal form (PreconditionError otherwise).
BudgetNfa build_bounded_nfa(const cfg::Grammar& g, std::size_t c);

/// (p^{c+2} - 1)/(p - 1) * (c + 1), with p the number of nonterminals.
std::size_t bounded_nfa_state_bound(std::size_t p, std::size_t c);

struct Bounded {};
struct Unbounded {
    std::string witness;  // length-lexicographically smallest
};
using BoundDecision = std::variant<Bounded, Unbounded>;

/// Decides whether every word of L(g) has degree <= c, for the quasi
/// Chomsky normal form of g: intersects the grammar with the complement of
/// build_bounded_nfa and tests emptiness. Pre: L(g) non-empty, no empty word.
BoundDecision decide_bounded(const cfg::Grammar& g, std::size_t c);

struct RecognizerRun {
    bool accepted = false;
    std::size_t visited = 0;          // distinct (position, pending, budget) triples
    std::size_t max_pending = 0;      // deepest pending stack seen
};

/// Membership in L(g, <=d) by on-the-fly simulation of the budget automaton.
/// Pre: g in quasi Chomsky normal form. Throws AlphabetError on foreign letters.
RecognizerRun bounded_recognizer(const cfg::Grammar& g, std::string_view w, std::size_t d);

/// (n + 1) * (d + 1) * p^{d+1}.
std::size_t recognizer_visit_bound(std::size_t n, std::size_t p, std::size_t d);

} // namespace nonreg::dnreg
