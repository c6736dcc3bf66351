#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nonreg::cfg {

enum class SymbolKind { Terminal, Nonterminal };

/// A grammar symbol. Terminals are single lowercase letters; nonterminal
/// names start with an uppercase letter.
struct Symbol {
    SymbolKind kind = SymbolKind::Terminal;
    std::string name;

    static Symbol terminal(char c) { return {SymbolKind::Terminal, std::string(1, c)}; }
    static Symbol nonterminal(std::string n) { return {SymbolKind::Nonterminal, std::move(n)}; }

    bool is_terminal() const noexcept { return kind == SymbolKind::Terminal; }
    char letter() const noexcept { return name.empty() ? '\0' : name.front(); }

    auto operator<=>(const Symbol&) const = default;
};

struct Rule {
    std::string lhs;
    std::vector<Symbol> rhs;  // empty for a lambda rule

    auto operator<=>(const Rule&) const = default;
};

enum class RuleClass { Regular, NonRegular };

/// Regular iff the right-hand side is a terminal word optionally followed by a
/// single nonterminal (A -> wB or A -> w, w possibly empty).
RuleClass classify_rule(const Rule& r);

/// Context-free grammar. Rule order is kept; it matters only for the naming
/// of fresh nonterminals produced by the transformations.
struct Grammar {
    std::vector<std::string> nonterminals;  // declaration order
    std::string terminals;                  // sorted, unique
    std::string start;
    std::vector<Rule> rules;

    bool has_nonterminal(std::string_view name) const;
    std::optional<std::size_t> nonterminal_index(std::string_view name) const;
    bool has_terminal(char c) const;

    /// Throws AlphabetError if `w` has letters outside `terminals`.
    void check_word(std::string_view w) const;

    bool operator==(const Grammar&) const = default;
};

/// Parse the ".cfg" text format. Throws ParseError.
Grammar parse_grammar(std::string_view text);

/// Canonical text form; parse_grammar(render_grammar(g)) == g for grammars
/// whose nonterminals all occur in rules. Alternatives of consecutive rules
/// with the same lhs are joined by " | ".
std::string render_grammar(const Grammar& g);

/// Keep exactly the accessible and co-accessible nonterminals.
/// Throws PreconditionError when the start symbol generates nothing.
Grammar reduce(const Grammar& g);

/// Nonterminals that derive the empty word.
std::vector<std::string> nullable_nonterminals(const Grammar& g);

/// Remove lambda- and chain-productions. Throws PreconditionError when the
/// start symbol is nullable.
Grammar make_proper(const Grammar& g);

/// reduce, make_proper, reduce.
Grammar normalize(const Grammar& g);

bool is_proper(const Grammar& g);
bool is_quasi_normal_form(const Grammar& g);
bool is_quasi_chomsky(const Grammar& g);

/// Rules become A -> a, A -> aB or A -> alpha with alpha in N^{>=2}.
/// Exactly one non-regular rule replaces each non-regular rule, so the
/// degree of non-regularity of every word is unchanged.
/// Pre: g reduced and proper.
Grammar to_quasi_normal_form(const Grammar& g);

/// Binarize A -> B1..Bk (k>=3) into a right-nested chain of binary rules.
/// Pre: g in quasi normal form.
Grammar to_quasi_chomsky(const Grammar& g);

/// Longest nonterminal-only right-hand side (the k in the k-1 inflation bound).
std::size_t longest_nonterminal_rhs(const Grammar& g);

struct WithStart { std::string nonterminal; };
struct RegularPart {};
struct ContextFreePart {};
using SubgrammarKind = std::variant<WithStart, RegularPart, ContextFreePart>;

Grammar subgrammar(const Grammar& g, const SubgrammarKind& which);

} // namespace nonreg::cfg
