#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nonreg {

using StateId = std::size_t;
using StateSet = std::vector<StateId>;  // sorted, unique

/// Nondeterministic finite automaton with epsilon moves over a char alphabet.
/// Epsilon is the label '\0'.
class Nfa {
public:
    static constexpr char epsilon = '\0';

    struct Edge {
        char label;
        StateId to;
        auto operator<=>(const Edge&) const = default;
    };

    Nfa() = default;
    explicit Nfa(std::string alphabet);

    StateId add_state(bool accepting = false);
    void add_transition(StateId from, char label, StateId to);
    void add_initial(StateId s);
    void set_accepting(StateId s, bool accepting = true);

    /// Letters are merged in; the alphabet stays sorted and unique.
    void extend_alphabet(std::string_view letters);

    std::size_t size() const noexcept { return out_.size(); }
    std::size_t transition_count() const noexcept;
    const std::string& alphabet() const noexcept { return alphabet_; }
    const StateSet& initial() const noexcept { return initial_; }
    bool is_accepting(StateId s) const { return accepting_[s]; }
    const std::vector<Edge>& edges(StateId s) const { return out_[s]; }

    StateSet epsilon_closure(StateSet states) const;
    /// Closed successor set after reading `c` from a closed set.
    StateSet step(const StateSet& closed, char c) const;
    StateSet initial_closure() const { return epsilon_closure(initial_); }
    bool any_accepting(const StateSet& s) const;

    bool accepts(std::string_view w) const;

    bool has_epsilon() const;
    /// No epsilon moves, one initial state, at most one successor per letter.
    bool is_deterministic() const;
    /// Deterministic and every letter of the alphabet defined everywhere.
    bool is_complete_deterministic() const;

    /// Successor in a deterministic automaton, if defined.
    std::optional<StateId> next(StateId s, char c) const;

private:
    std::string alphabet_;
    std::vector<std::vector<Edge>> out_;
    std::vector<bool> accepting_;
    StateSet initial_;
};

/// Subset construction. Only reachable subsets are built; with `complete` a
/// sink state is added so every letter is defined in every state.
Nfa determinize(const Nfa& n, bool complete = true);

/// Swap accepting and non-accepting states. Throws PreconditionError unless
/// `dfa` is complete and deterministic.
Nfa complement(const Nfa& dfa);

/// complement(determinize(n)) over `alphabet` merged with n's alphabet.
Nfa complement_of(const Nfa& n, std::string_view alphabet = {});

Nfa product_intersect(const Nfa& a, const Nfa& b);
Nfa unite(const Nfa& a, const Nfa& b);

/// True iff no accepting state is reachable.
bool is_empty(const Nfa& n);

/// Length-lexicographically smallest accepted word, if any.
std::optional<std::string> smallest_accepted(const Nfa& n);

/// Same accepted words of length <= max_len.
bool equivalent_up_to(const Nfa& a, const Nfa& b, std::size_t max_len);

/// Accepted words of length <= max_len, in length-lexicographic order.
std::vector<std::string> accepted_words(const Nfa& n, std::size_t max_len);

} // namespace nonreg
