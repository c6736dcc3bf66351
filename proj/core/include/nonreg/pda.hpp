#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonreg/profile.hpp"

namespace nonreg::pda {

enum class Mode { EmptyStack, FinalState };

/// Push writes >= 2 symbols, pop writes none, neutral writes exactly one.
enum class MoveKind { Push, Pop, Neutral };

inline constexpr char epsilon = '\0';
inline constexpr std::size_t max_stack_word = 8;

struct Transition {
    std::size_t from = 0;
    char input = epsilon;  // epsilon for a lambda move
    char top = 0;
    std::size_t to = 0;
    std::string write;  // replaces `top`; first char becomes the new top

    bool operator==(const Transition&) const = default;
};

MoveKind classify(const Transition& t);

struct Pda {
    std::vector<std::string> states;
    std::string input_alphabet;  // sorted, unique
    std::string stack_alphabet;  // sorted, unique
    std::vector<Transition> transitions;
    std::size_t start = 0;
    char stack_start = 'Z';
    std::vector<bool> accepting;  // per state
    Mode mode = Mode::EmptyStack;

    std::optional<std::size_t> state_index(std::string_view name) const;
    void check_word(std::string_view w) const;

    bool operator==(const Pda&) const = default;
};

/// ".pda" format. Throws ParseError.
Pda parse_pda(std::string_view text);
std::string render_pda(const Pda& p);

/// Outcome of the minimum-push search. `exceeded` is set when the push cap
/// was reached with unexplored configurations left, so an absent value is
/// then inconclusive.
struct PushSearch {
    std::optional<std::size_t> pushes;
    bool exceeded = false;
};

/// Default push cap for a word of length n.
std::size_t default_push_cap(std::size_t n);

/// Minimum number of push moves over accepting computations, exploring
/// configurations in order of push count up to `push_cap`.
PushSearch push_search(const Pda& p, std::string_view w, std::optional<std::size_t> push_cap = {});

/// Minimum pushes; absent when rejected. Throws BudgetExceeded when the
/// search was inconclusive.
std::optional<std::size_t> push_word(const Pda& p, std::string_view w);

bool accepts(const Pda& p, std::string_view w);

Profile push_profile(const Pda& p, std::size_t n_max, std::size_t cap = default_enumeration_cap);

/// Equivalent machine accepting in mode `to`. Every stack symbol gets a
/// bottom-marked twin so the bottom can be detected without an extra push;
/// a drain state empties the stack after a final state. The rewrite always
/// applies, even when `p` is already in mode `to`.
Pda convert_mode(const Pda& p, Mode to);

} // namespace nonreg::pda
