#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nonreg/nfa.hpp"
#include "nonreg/profile.hpp"

namespace nonreg::fatl {

/// Longest word the jump search accepts (consumed positions are a bitmask).
inline constexpr std::size_t max_word_length = 64;

struct Transition {
    std::size_t from = 0;
    char letter = 0;
    std::size_t to = 0;
    bool operator==(const Transition&) const = default;
};

/// Finite automaton with translucent letters. A letter is translucent in a
/// state exactly when the state has no transition on it.
struct Fatl {
    std::vector<std::string> states;
    std::string alphabet;  // sorted, unique
    std::vector<Transition> transitions;
    std::size_t start = 0;
    std::vector<bool> accepting;

    std::optional<std::size_t> state_index(std::string_view name) const;
    void check_word(std::string_view w) const;

    std::vector<std::size_t> successors(std::size_t q, char a) const;
    bool translucent(std::size_t q, char a) const;
    bool is_deterministic() const;

    bool operator==(const Fatl&) const = default;
};

/// ".fatl" format: "start: q", "final: ...", then "q a p" lines.
Fatl parse_fatl(std::string_view text);
std::string render_fatl(const Fatl& m);

bool accepts(const Fatl& m, std::string_view w);

/// Fewest jump steps over accepting computations; absent when rejected.
/// Throws PreconditionError for words longer than max_word_length.
std::optional<std::size_t> jc_word(const Fatl& m, std::string_view w);

Profile jc_profile(const Fatl& m, std::size_t n_max, std::size_t cap = default_enumeration_cap);

/// Recognizes L(m, <=c) by a left-to-right scan. A jump is an epsilon move
/// that guesses the letter it takes from further right; the guess stays
/// pending, together with the state it was made in, until the scan reaches
/// that letter. Letters passed meanwhile must be translucent in the states
/// of the guesses they were skipped by.
Nfa build_bounded_nfa(const Fatl& m, std::size_t c);

/// The transition relation read as an ordinary automaton.
Nfa zero_jump_language(const Fatl& m);

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

/// Looks for w in L(m) with jc > c and |w| <= search_bound. Prefixes on
/// which build_bounded_nfa(m, c) accepts every extension are skipped.
BoundCheck decide_jc_bounded(const Fatl& m, std::size_t c, std::size_t search_bound,
                             std::size_t work_cap = std::size_t{1} << 22);

/// For deterministic m: w is accepted, but not without a jump.
/// Throws PreconditionError when m is not deterministic.
bool requires_jump(const Fatl& m, std::string_view w);

/// q0 -b-> q1, q1 -b-> q1, q1 -c-> q2, q2 -a-> q3, final q3.
Fatl build_paper_example();

/// Two states alternating a and b: {w : |w|_a = |w|_b}.
Fatl build_equal_ab();

} // namespace nonreg::fatl
