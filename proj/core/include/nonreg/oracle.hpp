#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nonreg/efa.hpp"
#include "nonreg/fatl.hpp"
#include "nonreg/grammar.hpp"
#include "nonreg/nfa.hpp"
#include "nonreg/pda.hpp"
#include "nonreg/profile.hpp"

// Reference engines. They follow the definitions literally and are kept
// independent of the searches in the device modules so the two can be
// compared.
namespace nonreg::oracle {

struct LengthLex {
    bool operator()(const std::string& a, const std::string& b) const {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};

/// All words of length <= max_len of some language.
struct LanguageSlice {
    std::size_t max_len = 0;
    std::set<std::string, LengthLex> words;

    bool contains(std::string_view w) const { return words.count(std::string(w)) != 0; }
    bool operator==(const LanguageSlice&) const = default;
};

/// One word per line in length-lex order; the empty word is written "_".
std::string serialize(const LanguageSlice& s);
LanguageSlice parse_slice(std::string_view text, std::size_t max_len);

/// Calls `f` on every word over `alphabet` of length <= max_len in
/// length-lex order. Throws BudgetExceeded past `cap` words in total.
void for_each_word(std::string_view alphabet, std::size_t max_len,
                   const std::function<void(const std::string&)>& f,
                   std::size_t cap = std::size_t{1} << 24);

using Predicate = std::function<bool(std::string_view)>;

LanguageSlice enumerate(std::string_view alphabet, std::size_t max_len, const Predicate& member);
/// Derivation search over leftmost sentential forms of normalize(g).
/// Throws PreconditionError when the start symbol is nullable.
LanguageSlice enumerate(const cfg::Grammar& g, std::size_t max_len);
LanguageSlice enumerate(const pda::Pda& p, std::size_t max_len);
LanguageSlice enumerate(const efa::Efa& a, std::size_t max_len);
LanguageSlice enumerate(const fatl::Fatl& m, std::size_t max_len);
LanguageSlice enumerate(const Nfa& n, std::size_t max_len);

/// Minimum non-regular rule count over every leftmost derivation of w with
/// at most 2|w|-1 steps. Pre: g proper.
std::optional<std::size_t> brute_min_measure(const cfg::Grammar& g, std::string_view w);
/// Minimum pushes over computations without repeated configurations on a
/// path and with at most pda::default_push_cap(|w|) pushes.
std::optional<std::size_t> brute_min_measure(const pda::Pda& p, std::string_view w);
/// Minimum non-identity steps over all runs.
std::optional<std::size_t> brute_min_measure(const efa::Efa& a, std::string_view w);
/// Minimum jumps over all computations, with explicit remaining words.
std::optional<std::size_t> brute_min_measure(const fatl::Fatl& m, std::string_view w);

/// Jump counts of every accepting computation of w, one entry each.
std::vector<std::size_t> fatl_computations(const fatl::Fatl& m, std::string_view w);

template <class Device>
Profile brute_profile(const Device& d, std::string_view alphabet, std::size_t n_max) {
    Profile p;
    for (std::size_t n = 1; n <= n_max; ++n) p.entries[n] = 0;
    for_each_word(alphabet, n_max, [&](const std::string& w) {
        if (w.empty()) return;
        if (auto v = brute_min_measure(d, w)) p.entries[w.size()] = std::max(p.entries[w.size()], *v);
    });
    p.exhaustive_up_to = n_max;
    return p;
}

/// b a^{i1} b ... a^{ik} b c^m, k >= 1, with a block j where i_j != j and
/// m = j - i_j if j > i_j, m = 1 if j < i_j.
bool sqrt_language(std::string_view w);
/// b^n a b^m c (n + m >= 1) or b^n c a (n >= 1).
bool translucent_example_language(std::string_view w);
/// Same number of a's and b's.
bool equal_ab(std::string_view w);

/// Grammar for L(g) ∩ L(n) with nonterminals named "A[p,q]" for the pairs
/// of states of the determinized n that A can connect. The start symbol is
/// "S[]" when n has several accepting states.
cfg::Grammar intersect_grammar_nfa(const cfg::Grammar& g, const Nfa& n);

struct Empty {};
struct NonEmpty {
    std::string witness;  // shortest, then lexicographically least
};
using Emptiness = std::variant<Empty, NonEmpty>;

Emptiness cfg_emptiness(const cfg::Grammar& g);

enum class Family { Constant, Log, Sqrt, Linear };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
double family_value(Family f, double n);

struct FitOptions {
    std::size_t n0 = 4;
    double tol = 0.15;
};

struct GrowthFit {
    double constant = 0;      // least-squares C in value ~ C f(n)
    double max_residual = 0;  // max |value - C f(n)| over fitted points
    bool consistent = false;  // value <= C f(n) (1 + tol) for every n >= n0
    double lower_constant = 0;  // largest C' with value >= C' f(n) on the fitted points
    std::string verdict;
};

/// Fits points n >= n0 with a nonzero value. Throws PreconditionError when
/// fewer than 3 lengths >= n0 are present.
GrowthFit growth_fit(const Profile& p, Family f, FitOptions opt = {});

} // namespace nonreg::oracle
