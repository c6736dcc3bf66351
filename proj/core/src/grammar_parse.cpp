#include <cctype>
#include <set>
#include <sstream>

#include "nonreg/error.hpp"
#include "nonreg/grammar.hpp"

namespace nonreg::cfg {

namespace {

using PE = ParseError;

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

bool is_nonterminal_token(const std::string& t) {
    if (t.empty() || !std::isupper(static_cast<unsigned char>(t[0]))) return false;
    return t.find('|') == std::string::npos;
}

bool is_terminal_token(const std::string& t) {
    return t.size() == 1 && std::islower(static_cast<unsigned char>(t[0]));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Grammar parse_grammar(std::string_view text) {
    std::optional<std::string> start;
    std::vector<Rule> rules;
    std::set<char> terminals_used;
    std::vector<std::pair<char, std::size_t>> lowercase_lhs;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++lineno;
        if (line.empty() || line.front() == '#') continue;

        if (line.rfind("start:", 0) == 0) {
            if (start) throw PE(PE::Kind::Syntax, lineno, "duplicate start line");
            auto toks = split_ws(line.substr(6));
            if (toks.size() != 1 || !is_nonterminal_token(toks[0])) {
                throw PE(PE::Kind::Syntax, lineno, "start line must name one nonterminal");
            }
            start = toks[0];
            continue;
        }

        std::size_t arrow = line.find("->");
        if (arrow == std::string_view::npos) {
            throw PE(PE::Kind::Syntax, lineno, "expected '<Nonterminal> -> ...'");
        }
        auto lhs_toks = split_ws(line.substr(0, arrow));
        if (lhs_toks.size() != 1) {
            throw PE(PE::Kind::Syntax, lineno, "left-hand side must be a single nonterminal");
        }
        const std::string& lhs = lhs_toks[0];
        if (is_terminal_token(lhs)) {
            lowercase_lhs.emplace_back(lhs[0], lineno);
        } else if (!is_nonterminal_token(lhs)) {
            throw PE(PE::Kind::Syntax, lineno, "bad left-hand side '" + lhs + "'");
        }

        std::string_view rest = line.substr(arrow + 2);
        std::size_t alt_begin = 0;
        while (true) {
            std::size_t bar = rest.find('|', alt_begin);
            std::string_view alt = rest.substr(alt_begin, bar == std::string_view::npos
                                                              ? std::string_view::npos
                                                              : bar - alt_begin);
            auto toks = split_ws(alt);
            if (toks.empty()) throw PE(PE::Kind::Syntax, lineno, "empty alternative (use '_')");
            Rule r{lhs, {}};
            if (!(toks.size() == 1 && toks[0] == "_")) {
                for (const auto& t : toks) {
                    if (t == "_") {
                        throw PE(PE::Kind::Syntax, lineno, "'_' must stand alone");
                    } else if (is_terminal_token(t)) {
                        r.rhs.push_back(Symbol::terminal(t[0]));
                        terminals_used.insert(t[0]);
                    } else if (is_nonterminal_token(t)) {
                        r.rhs.push_back(Symbol::nonterminal(t));
                    } else {
                        throw PE(PE::Kind::Syntax, lineno, "bad token '" + t + "'");
                    }
                }
            }
            rules.push_back(std::move(r));
            if (bar == std::string_view::npos) break;
            alt_begin = bar + 1;
        }
    }

    for (const auto& [c, line] : lowercase_lhs) {
        throw PE(PE::Kind::DuplicateSymbolKind, line,
                 std::string("terminal '") + c + "' used as a nonterminal");
    }
    if (!start) throw PE(PE::Kind::UndeclaredStart, 0, "missing 'start:' line");
    bool start_has_rule = false;
    for (const auto& r : rules) start_has_rule = start_has_rule || r.lhs == *start;
    if (!start_has_rule) {
        throw PE(PE::Kind::UndeclaredStart, 0, "start symbol " + *start + " has no rules");
    }

    Grammar g;
    g.start = *start;
    g.nonterminals.push_back(g.start);
    std::set<std::string> seen{g.start};
    for (const auto& r : rules) {
        if (seen.insert(r.lhs).second) g.nonterminals.push_back(r.lhs);
        for (const auto& s : r.rhs) {
            if (!s.is_terminal() && seen.insert(s.name).second) g.nonterminals.push_back(s.name);
        }
    }
    g.terminals.assign(terminals_used.begin(), terminals_used.end());
    g.rules = std::move(rules);
    return g;
}

std::string render_grammar(const Grammar& g) {
    std::ostringstream out;
    out << "start: " << g.start << '\n';
    for (std::size_t i = 0; i < g.rules.size();) {
        const auto& lhs = g.rules[i].lhs;
        out << lhs << " ->";
        bool first = true;
        for (; i < g.rules.size() && g.rules[i].lhs == lhs; ++i) {
            if (!first) out << " |";
            first = false;
            if (g.rules[i].rhs.empty()) out << " _";
            for (const auto& s : g.rules[i].rhs) out << ' ' << s.name;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace nonreg::cfg
