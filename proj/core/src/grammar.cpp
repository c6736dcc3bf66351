#include "nonreg/grammar.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nonreg/error.hpp"

namespace nonreg::cfg {

RuleClass classify_rule(const Rule& r) {
    for (std::size_t i = 0; i < r.rhs.size(); ++i) {
        if (!r.rhs[i].is_terminal() && i + 1 != r.rhs.size()) {
            return RuleClass::NonRegular;
        }
    }
    return RuleClass::Regular;
}

bool Grammar::has_nonterminal(std::string_view name) const {
    return nonterminal_index(name).has_value();
}

std::optional<std::size_t> Grammar::nonterminal_index(std::string_view name) const {
    auto it = std::find(nonterminals.begin(), nonterminals.end(), name);
    if (it == nonterminals.end()) return std::nullopt;
    return static_cast<std::size_t>(it - nonterminals.begin());
}

bool Grammar::has_terminal(char c) const {
    return terminals.find(c) != std::string::npos;
}

void Grammar::check_word(std::string_view w) const {
    for (char c : w) {
        if (!has_terminal(c)) {
            throw AlphabetError(std::string("letter '") + c + "' is not a terminal of the grammar");
        }
    }
}

namespace {

// Rebuild the symbol tables from the rules: start first, then nonterminals in
// order of first occurrence; terminals sorted. Keeps output canonical.
Grammar canonical(std::string start, std::vector<Rule> rules) {
    Grammar g;
    g.start = std::move(start);
    g.nonterminals.push_back(g.start);
    std::set<std::string> seen{g.start};
    std::set<char> terms;
    auto note = [&](const std::string& n) {
        if (seen.insert(n).second) g.nonterminals.push_back(n);
    };
    for (const auto& r : rules) {
        note(r.lhs);
        for (const auto& s : r.rhs) {
            if (s.is_terminal()) terms.insert(s.letter());
            else note(s.name);
        }
    }
    g.terminals.assign(terms.begin(), terms.end());
    // Drop exact duplicates, keeping the first occurrence.
    std::set<Rule> kept;
    for (auto& r : rules) {
        if (kept.insert(r).second) g.rules.push_back(std::move(r));
    }
    return g;
}

// Fresh names "X#k" continue after the largest k already present.
class FreshNames {
public:
    explicit FreshNames(const Grammar& g) {
        for (const auto& n : g.nonterminals) {
            if (n.size() > 2 && n.compare(0, 2, "X#") == 0) {
                try {
                    next_ = std::max(next_, std::stoul(n.substr(2)) + 1);
                } catch (const std::exception&) {
                }
            }
        }
    }
    std::string next() { return "X#" + std::to_string(next_++); }

private:
    unsigned long next_ = 1;
};

std::set<std::string> generating_set(const Grammar& g) {
    std::set<std::string> gen;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            if (gen.count(r.lhs)) continue;
            bool ok = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
                return s.is_terminal() || gen.count(s.name);
            });
            if (ok) {
                gen.insert(r.lhs);
                changed = true;
            }
        }
    }
    return gen;
}

} // namespace

Grammar reduce(const Grammar& g) {
    auto gen = generating_set(g);
    if (!gen.count(g.start)) {
        throw PreconditionError("empty language: start symbol " + g.start + " is not co-accessible");
    }
    std::vector<const Rule*> useful;
    for (const auto& r : g.rules) {
        if (!gen.count(r.lhs)) continue;
        bool ok = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
            return s.is_terminal() || gen.count(s.name);
        });
        if (ok) useful.push_back(&r);
    }
    std::set<std::string> reach{g.start};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule* r : useful) {
            if (!reach.count(r->lhs)) continue;
            for (const auto& s : r->rhs) {
                if (!s.is_terminal() && reach.insert(s.name).second) changed = true;
            }
        }
    }
    std::vector<Rule> rules;
    for (const Rule* r : useful) {
        if (reach.count(r->lhs)) rules.push_back(*r);
    }
    return canonical(g.start, std::move(rules));
}

std::vector<std::string> nullable_nonterminals(const Grammar& g) {
    std::set<std::string> nullable;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            if (nullable.count(r.lhs)) continue;
            bool all = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
                return !s.is_terminal() && nullable.count(s.name);
            });
            if (all) {
                nullable.insert(r.lhs);
                changed = true;
            }
        }
    }
    std::vector<std::string> out;
    for (const auto& n : g.nonterminals) {
        if (nullable.count(n)) out.push_back(n);
    }
    return out;
}

Grammar make_proper(const Grammar& g) {
    auto nullable_list = nullable_nonterminals(g);
    std::set<std::string> nullable(nullable_list.begin(), nullable_list.end());
    if (nullable.count(g.start)) {
        throw PreconditionError("the empty word is in the language: start symbol " + g.start +
                                " is nullable");
    }

    // Lambda elimination: every subset of nullable occurrences may be dropped.
    std::vector<Rule> no_lambda;
    for (const auto& r : g.rules) {
        std::vector<std::size_t> optional_pos;
        for (std::size_t i = 0; i < r.rhs.size(); ++i) {
            if (!r.rhs[i].is_terminal() && nullable.count(r.rhs[i].name)) optional_pos.push_back(i);
        }
        const std::size_t variants = std::size_t{1} << optional_pos.size();
        for (std::size_t mask = 0; mask < variants; ++mask) {
            Rule out{r.lhs, {}};
            std::size_t k = 0;
            for (std::size_t i = 0; i < r.rhs.size(); ++i) {
                if (k < optional_pos.size() && optional_pos[k] == i) {
                    bool drop = (mask >> k) & 1U;
                    ++k;
                    if (drop) continue;
                }
                out.rhs.push_back(r.rhs[i]);
            }
            if (!out.rhs.empty()) no_lambda.push_back(std::move(out));
        }
    }

    auto is_chain = [](const Rule& r) { return r.rhs.size() == 1 && !r.rhs[0].is_terminal(); };

    // Chain closure per nonterminal, in declaration order.
    std::map<std::string, std::vector<std::string>> closure;
    for (const auto& a : g.nonterminals) {
        std::vector<std::string> order{a};
        std::set<std::string> seen{a};
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (const auto& r : no_lambda) {
                if (r.lhs == order[i] && is_chain(r) && seen.insert(r.rhs[0].name).second) {
                    order.push_back(r.rhs[0].name);
                }
            }
        }
        closure[a] = std::move(order);
    }

    // Emit rules grouped by the original rule order of their source.
    std::vector<Rule> rules;
    for (const auto& a : g.nonterminals) {
        for (const auto& b : closure[a]) {
            for (const auto& r : no_lambda) {
                if (r.lhs == b && !is_chain(r)) rules.push_back(Rule{a, r.rhs});
            }
        }
    }
    // Stable order: rules for the start first, then by nonterminal order.
    return canonical(g.start, std::move(rules));
}

Grammar normalize(const Grammar& g) {
    return reduce(make_proper(reduce(g)));
}

bool is_proper(const Grammar& g) {
    return std::none_of(g.rules.begin(), g.rules.end(), [](const Rule& r) {
        return r.rhs.empty() || (r.rhs.size() == 1 && !r.rhs[0].is_terminal());
    });
}

namespace {

bool all_nonterminals(const std::vector<Symbol>& rhs) {
    return std::none_of(rhs.begin(), rhs.end(), [](const Symbol& s) { return s.is_terminal(); });
}

bool quasi_shape(const Rule& r) {
    const auto& a = r.rhs;
    if (a.size() == 1) return a[0].is_terminal();
    if (a.size() == 2 && a[0].is_terminal() && !a[1].is_terminal()) return true;
    return a.size() >= 2 && all_nonterminals(a);
}

} // namespace

bool is_quasi_normal_form(const Grammar& g) {
    return std::all_of(g.rules.begin(), g.rules.end(), quasi_shape);
}

bool is_quasi_chomsky(const Grammar& g) {
    return std::all_of(g.rules.begin(), g.rules.end(), [](const Rule& r) {
        return quasi_shape(r) && (!all_nonterminals(r.rhs) || r.rhs.size() == 2);
    });
}

Grammar to_quasi_normal_form(const Grammar& g) {
    if (!is_proper(g)) {
        throw PreconditionError("to_quasi_normal_form expects a proper grammar");
    }
    if (is_quasi_normal_form(g)) return g;

    FreshNames fresh(g);
    std::map<char, std::string> proxy;  // terminal -> nonterminal deriving only it
    std::vector<Rule> rules;
    std::vector<Rule> proxy_rules;

    auto proxy_for = [&](char c) -> Symbol {
        auto it = proxy.find(c);
        if (it == proxy.end()) {
            it = proxy.emplace(c, fresh.next()).first;
            proxy_rules.push_back(Rule{it->second, {Symbol::terminal(c)}});
        }
        return Symbol::nonterminal(it->second);
    };

    // A -> a1 ... ak tail  becomes  A -> a1 D1, ..., D(k-1) -> ak tail'
    auto regular_chain = [&](const std::string& lhs, const std::vector<Symbol>& prefix,
                             std::optional<Symbol> tail) {
        std::string cur = lhs;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const bool last = i + 1 == prefix.size();
            if (last) {
                Rule r{cur, {prefix[i]}};
                if (tail) r.rhs.push_back(*tail);
                rules.push_back(std::move(r));
            } else {
                std::string next = fresh.next();
                rules.push_back(Rule{cur, {prefix[i], Symbol::nonterminal(next)}});
                cur = next;
            }
        }
    };

    for (const auto& r : g.rules) {
        if (quasi_shape(r)) {
            rules.push_back(r);
            continue;
        }
        if (classify_rule(r) == RuleClass::Regular) {
            std::vector<Symbol> prefix;
            std::optional<Symbol> tail;
            for (const auto& s : r.rhs) {
                if (s.is_terminal()) prefix.push_back(s);
                else tail = s;
            }
            regular_chain(r.lhs, prefix, tail);
            continue;
        }
        // Non-regular: leading terminals (if any) peel off into a regular
        // chain ending in a fresh C; C -> beta with terminals proxied.
        std::size_t k = 0;
        while (k < r.rhs.size() && r.rhs[k].is_terminal()) ++k;
        std::vector<Symbol> beta;
        for (std::size_t i = k; i < r.rhs.size(); ++i) {
            beta.push_back(r.rhs[i].is_terminal() ? proxy_for(r.rhs[i].letter()) : r.rhs[i]);
        }
        if (k == 0) {
            rules.push_back(Rule{r.lhs, std::move(beta)});
        } else {
            std::string c = fresh.next();
            std::vector<Symbol> prefix(r.rhs.begin(), r.rhs.begin() + static_cast<std::ptrdiff_t>(k));
            regular_chain(r.lhs, prefix, Symbol::nonterminal(c));
            rules.push_back(Rule{c, std::move(beta)});
        }
    }
    rules.insert(rules.end(), proxy_rules.begin(), proxy_rules.end());
    return canonical(g.start, std::move(rules));
}

Grammar to_quasi_chomsky(const Grammar& g) {
    if (!is_quasi_normal_form(g)) {
        throw PreconditionError("to_quasi_chomsky expects a grammar in quasi normal form");
    }
    if (is_quasi_chomsky(g)) return g;
    FreshNames fresh(g);
    std::vector<Rule> rules;
    for (const auto& r : g.rules) {
        if (!all_nonterminals(r.rhs) || r.rhs.size() <= 2) {
            rules.push_back(r);
            continue;
        }
        std::string cur = r.lhs;
        for (std::size_t i = 0; i + 2 < r.rhs.size(); ++i) {
            std::string next = fresh.next();
            rules.push_back(Rule{cur, {r.rhs[i], Symbol::nonterminal(next)}});
            cur = next;
        }
        rules.push_back(Rule{cur, {r.rhs[r.rhs.size() - 2], r.rhs.back()}});
    }
    return canonical(g.start, std::move(rules));
}

std::size_t longest_nonterminal_rhs(const Grammar& g) {
    std::size_t k = 0;
    for (const auto& r : g.rules) {
        if (r.rhs.size() >= 2 && all_nonterminals(r.rhs)) k = std::max(k, r.rhs.size());
    }
    return k;
}

Grammar subgrammar(const Grammar& g, const SubgrammarKind& which) {
    return std::visit(
        [&](const auto& w) -> Grammar {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, WithStart>) {
                if (!g.has_nonterminal(w.nonterminal)) {
                    throw PreconditionError("unknown nonterminal " + w.nonterminal);
                }
                Grammar out = g;
                out.start = w.nonterminal;
                // Keep the symbol table, but with the new axiom first.
                out.nonterminals.erase(std::find(out.nonterminals.begin(), out.nonterminals.end(),
                                                 w.nonterminal));
                out.nonterminals.insert(out.nonterminals.begin(), w.nonterminal);
                return out;
            } else if constexpr (std::is_same_v<W, RegularPart>) {
                std::vector<Rule> rules;
                for (const auto& r : g.rules) {
                    if (classify_rule(r) == RuleClass::Regular) rules.push_back(r);
                }
                Grammar out = canonical(g.start, std::move(rules));
                return out;
            } else {
                return g;
            }
        },
        which);
}

} // namespace nonreg::cfg
