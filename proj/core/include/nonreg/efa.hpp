#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nonreg/group.hpp"
#include "nonreg/nfa.hpp"
#include "nonreg/profile.hpp"

namespace nonreg::efa {

struct Transition {
    std::size_t from = 0;
    char letter = 0;
    std::size_t to = 0;
    group::Element label;
};

/// Finite automaton with a register in a group. Every move reads a letter.
struct Efa {
    std::vector<std::string> states;
    std::string alphabet;  // sorted, unique
    std::shared_ptr<const group::GroupSpec> group;
    std::vector<Transition> transitions;
    std::size_t start = 0;
    std::vector<bool> accepting;

    std::optional<std::size_t> state_index(std::string_view name) const;
    void check_word(std::string_view w) const;
};

/// ".efa" format: "group: ...", "start: q", "final: ...", then "q a p <element>".
Efa parse_efa(std::string_view text);
std::string render_efa(const Efa& a);

bool accepts(const Efa& a, std::string_view w);

/// Fewest non-identity register steps over accepting computations.
std::optional<std::size_t> gmc_word(const Efa& a, std::string_view w);

/// Per-length maxima of gmc_word for n = 1..n_max. Words sharing the same
/// map (state, register) -> cheapest cost are merged, so the search runs
/// over distinct maps rather than over words. Throws BudgetExceeded when a
/// layer holds more than `cap` maps.
Profile gmc_profile(const Efa& a, std::size_t n_max, std::size_t cap = default_enumeration_cap);

/// Same search keeping only the `beam` maps with the largest accumulated
/// cost per layer. Every entry is the measure of some word of that length,
/// so it bounds the true profile from below; entries up to
/// exhaustive_up_to (the last layer the beam did not cut) are exact.
Profile gmc_lower_profile(const Efa& a, std::size_t n_max, std::size_t beam = 4096);

struct BudgetNfa {
    Nfa nfa;
    std::size_t register_values = 0;  // distinct register contents reached
    std::size_t distinct_labels = 0;  // distinct non-identity transition labels
};

/// Recognizes L(a, <=c): states (q, register, budget).
BudgetNfa build_bounded_nfa(const Efa& a, std::size_t c);

struct Bounded {
    std::size_t up_to;
};
struct Counterexample {
    std::string word;  // length-lexicographically smallest
};
struct Unknown {
    std::string reason;
};
using BoundCheck = std::variant<Bounded, Counterexample, Unknown>;

/// Looks for w in L(a) with gmc > c and |w| <= search_bound by exploring
/// the configurations of `a` jointly with the subset automaton of
/// build_bounded_nfa(a, c). Reports Unknown after `work_cap` subsets.
BoundCheck check_gmc_bounded(const Efa& a, std::size_t c, std::size_t search_bound,
                             std::size_t work_cap = std::size_t{1} << 21);

/// {a^n b^n : n >= 1} over Z: a adds 1, b subtracts 1.
Efa build_anbn_efa();

/// Over Z x Zmod 2, the language of words b a^{i1} b ... a^{ik} b c^m with a
/// block j such that i_j != j, where m = j - i_j if j > i_j and m = 1
/// otherwise. The Z entry counts blocks up to the guessed block and is then
/// balanced by its a's and the trailing c's; the Zmod 2 entry flags the
/// i_j > j branch.
Efa build_sqrt_efa();

} // namespace nonreg::efa
