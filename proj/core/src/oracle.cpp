#include "nonreg/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <sstream>

#include "nonreg/error.hpp"

namespace nonreg::oracle {

std::string serialize(const LanguageSlice& s) {
    std::string out;
    for (const auto& w : s.words) {
        out += w.empty() ? "_" : w;
        out += '\n';
    }
    return out;
}

LanguageSlice parse_slice(std::string_view text, std::size_t max_len) {
    LanguageSlice s;
    s.max_len = max_len;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        s.words.insert(line == "_" ? std::string() : line);
    }
    return s;
}

void for_each_word(std::string_view alphabet, std::size_t max_len,
                   const std::function<void(const std::string&)>& f, std::size_t cap) {
    std::size_t total = 0;
    for (std::size_t n = 0; n <= max_len; ++n) {
        std::size_t count = word_count(alphabet.size(), n);
        if (count > cap || total + count > cap) {
            throw BudgetExceeded("more than " + std::to_string(cap) + " words up to length " + std::to_string(n));
        }
        total += count;
        if (n > 0 && alphabet.empty()) break;
        std::vector<std::size_t> digits(n, 0);
        std::string w(n, n ? alphabet[0] : '\0');
        while (true) {
            f(w);
            std::size_t i = n;
            while (i > 0 && ++digits[i - 1] == alphabet.size()) digits[i - 1] = 0, w[i - 1] = alphabet[0], --i;
            if (i == 0) break;
            w[i - 1] = alphabet[digits[i - 1]];
        }
    }
}

LanguageSlice enumerate(std::string_view alphabet, std::size_t max_len, const Predicate& member) {
    LanguageSlice s;
    s.max_len = max_len;
    for_each_word(alphabet, max_len, [&](const std::string& w) {
        if (member(w)) s.words.insert(w);
    });
    return s;
}

// ---------------------------------------------------------------- grammars

namespace {

// Grammar with integer symbols: terminals are letters (>= 0 as char codes),
// nonterminals are encoded as -(index + 1).
struct Compiled {
    std::vector<std::vector<std::vector<int>>> rules;  // per nonterminal: rhs list
    std::vector<std::vector<bool>> non_regular;        // parallel to rules
    int start = 0;
};

Compiled compile(const cfg::Grammar& g) {
    Compiled c;
    c.rules.resize(g.nonterminals.size());
    c.non_regular.resize(g.nonterminals.size());
    for (const auto& r : g.rules) {
        auto a = *g.nonterminal_index(r.lhs);
        std::vector<int> rhs;
        for (const auto& s : r.rhs) {
            rhs.push_back(s.is_terminal() ? static_cast<unsigned char>(s.letter())
                                          : -static_cast<int>(*g.nonterminal_index(s.name)) - 1);
        }
        c.rules[a].push_back(std::move(rhs));
        c.non_regular[a].push_back(cfg::classify_rule(r) == cfg::RuleClass::NonRegular);
    }
    c.start = static_cast<int>(*g.nonterminal_index(g.start));
    return c;
}

// Depth-first over leftmost derivations; `form` holds the unexpanded suffix
// with its leftmost symbol at the back.
struct DerivationSearch {
    const Compiled& g;
    std::string_view w;
    std::size_t max_steps;
    std::optional<std::size_t> best;

    void run(std::vector<int>& form, std::size_t matched, std::size_t steps, std::size_t cost) {
        // consume leading terminals
        std::size_t popped = 0;
        bool ok = true;
        while (!form.empty() && form.back() >= 0) {
            if (matched + popped >= w.size() || static_cast<unsigned char>(w[matched + popped]) != form.back()) {
                ok = false;
                break;
            }
            popped++;
            form.pop_back();
        }
        // restore helper
        auto restore = [&](std::size_t k) {
            for (std::size_t i = 0; i < k; ++i) form.push_back(static_cast<unsigned char>(w[matched + k - 1 - i]));
        };
        if (!ok) {
            restore(popped);
            return;
        }
        const std::size_t pos = matched + popped;
        if (form.empty()) {
            if (pos == w.size() && (!best || cost < *best)) best = cost;
            restore(popped);
            return;
        }
        if (pos + form.size() > w.size() || steps == max_steps) {
            restore(popped);
            return;
        }
        const int a = -form.back() - 1;
        form.pop_back();
        for (std::size_t i = 0; i < g.rules[a].size(); ++i) {
            const auto& rhs = g.rules[a][i];
            form.insert(form.end(), rhs.rbegin(), rhs.rend());
            run(form, pos, steps + 1, cost + (g.non_regular[a][i] ? 1 : 0));
            form.resize(form.size() - rhs.size());
        }
        form.push_back(-a - 1);
        restore(popped);
    }
};

} // namespace

std::optional<std::size_t> brute_min_measure(const cfg::Grammar& g, std::string_view w) {
    if (!cfg::is_proper(g)) throw PreconditionError("brute derivation search needs a proper grammar");
    g.check_word(w);
    if (w.empty()) return std::nullopt;
    Compiled c = compile(g);
    DerivationSearch s{c, w, 2 * w.size() - 1, std::nullopt};
    std::vector<int> form{-c.start - 1};
    s.run(form, 0, 0, 0);
    return s.best;
}

LanguageSlice enumerate(const cfg::Grammar& g0, std::size_t max_len) {
    auto nullable = cfg::nullable_nonterminals(g0);
    if (std::find(nullable.begin(), nullable.end(), g0.start) != nullable.end()) {
        throw PreconditionError("enumerate: the start symbol derives the empty word");
    }
    const cfg::Grammar g = cfg::normalize(g0);
    const Compiled c = compile(g);
    LanguageSlice s;
    s.max_len = max_len;

    // sentential form = terminal prefix + nonterminal-headed suffix
    std::set<std::pair<std::string, std::vector<int>>> seen;
    std::vector<std::pair<std::string, std::vector<int>>> work{{"", {-c.start - 1}}};
    while (!work.empty()) {
        auto [prefix, form] = std::move(work.back());
        work.pop_back();
        while (!form.empty() && form.back() >= 0) {
            prefix.push_back(static_cast<char>(form.back()));
            form.pop_back();
        }
        if (prefix.size() + form.size() > max_len) continue;
        if (form.empty()) {
            s.words.insert(prefix);
            continue;
        }
        if (!seen.emplace(prefix, form).second) continue;
        const int a = -form.back() - 1;
        form.pop_back();
        for (const auto& rhs : c.rules[a]) {
            auto next = form;
            next.insert(next.end(), rhs.rbegin(), rhs.rend());
            work.emplace_back(prefix, std::move(next));
        }
    }
    return s;
}

// -------------------------------------------------------------------- PDAs

namespace {

struct PdaSearch {
    const pda::Pda& p;
    std::string_view w;
    std::size_t cap;
    std::optional<std::size_t> best;
    std::set<std::tuple<std::size_t, std::size_t, std::string>> on_path;

    void run(std::size_t q, std::size_t pos, std::string& stack, std::size_t pushes) {
        const bool accept = pos == w.size() &&
                            (p.mode == pda::Mode::EmptyStack ? stack.empty() : static_cast<bool>(p.accepting[q]));
        if (accept) {
            if (!best || pushes < *best) best = pushes;
            return;
        }
        if (stack.empty()) return;
        auto key = std::make_tuple(q, pos, stack);
        if (!on_path.insert(key).second) return;
        const char top = stack.back();
        for (const auto& t : p.transitions) {
            if (t.from != q || t.top != top) continue;
            std::size_t npos = pos;
            if (t.input != pda::epsilon) {
                if (pos >= w.size() || w[pos] != t.input) continue;
                ++npos;
            }
            const std::size_t np = pushes + (t.write.size() >= 2 ? 1 : 0);
            if (np > cap) continue;
            std::string next = stack;
            next.pop_back();
            next.append(t.write.rbegin(), t.write.rend());
            run(t.to, npos, next, np);
        }
        on_path.erase(key);
    }
};

} // namespace

std::optional<std::size_t> brute_min_measure(const pda::Pda& p, std::string_view w) {
    p.check_word(w);
    PdaSearch s{p, w, pda::default_push_cap(w.size()), std::nullopt, {}};
    std::string stack(1, p.stack_start);
    s.run(p.start, 0, stack, 0);
    return s.best;
}

LanguageSlice enumerate(const pda::Pda& p, std::size_t max_len) {
    return enumerate(p.input_alphabet, max_len,
                     [&](std::string_view w) { return brute_min_measure(p, w).has_value(); });
}

// -------------------------------------------------------------------- EFAs

std::optional<std::size_t> brute_min_measure(const efa::Efa& a, std::string_view w) {
    a.check_word(w);
    std::optional<std::size_t> best;
    auto run = [&](auto&& self, std::size_t q, std::size_t pos, const group::Element& reg, std::size_t cost) -> void {
        if (pos == w.size()) {
            if (a.accepting[q] && group::is_identity(reg) && (!best || cost < *best)) best = cost;
            return;
        }
        for (const auto& t : a.transitions) {
            if (t.from != q || t.letter != w[pos]) continue;
            self(self, t.to, pos + 1, group::mul(reg, t.label), cost + (group::is_identity(t.label) ? 0 : 1));
        }
    };
    run(run, a.start, 0, group::identity(a.group), 0);
    return best;
}

LanguageSlice enumerate(const efa::Efa& a, std::size_t max_len) {
    return enumerate(a.alphabet, max_len,
                     [&](std::string_view w) { return brute_min_measure(a, w).has_value(); });
}

// ------------------------------------------------------------------- FATLs

namespace {

void fatl_all(const fatl::Fatl& m, std::size_t q, const std::string& rest, std::size_t jumps,
              std::vector<std::size_t>& out) {
    if (rest.empty()) {
        if (m.accepting[q]) out.push_back(jumps);
        return;
    }
    // head read
    for (std::size_t p : m.successors(q, rest[0])) fatl_all(m, p, rest.substr(1), jumps, out);
    // (q, x a y) -> (p, x y) with x non-empty and translucent in q
    for (std::size_t i = 1; i < rest.size(); ++i) {
        const std::string x = rest.substr(0, i);
        if (!std::all_of(x.begin(), x.end(), [&](char b) { return m.translucent(q, b); })) break;
        for (std::size_t p : m.successors(q, rest[i])) {
            fatl_all(m, p, x + rest.substr(i + 1), jumps + 1, out);
        }
    }
}

} // namespace

std::vector<std::size_t> fatl_computations(const fatl::Fatl& m, std::string_view w) {
    m.check_word(w);
    std::vector<std::size_t> out;
    fatl_all(m, m.start, std::string(w), 0, out);
    return out;
}

std::optional<std::size_t> brute_min_measure(const fatl::Fatl& m, std::string_view w) {
    auto all = fatl_computations(m, w);
    if (all.empty()) return std::nullopt;
    return *std::min_element(all.begin(), all.end());
}

LanguageSlice enumerate(const fatl::Fatl& m, std::size_t max_len) {
    return enumerate(m.alphabet, max_len,
                     [&](std::string_view w) { return brute_min_measure(m, w).has_value(); });
}

LanguageSlice enumerate(const Nfa& n, std::size_t max_len) {
    LanguageSlice s;
    s.max_len = max_len;
    for (auto& w : accepted_words(n, max_len)) s.words.insert(std::move(w));
    return s;
}

// -------------------------------------------------------------- predicates

bool sqrt_language(std::string_view w) {
    if (w.empty() || w[0] != 'b') return false;
    std::vector<std::size_t> blocks;
    std::size_t i = 1, run = 0;
    for (; i < w.size() && w[i] != 'c'; ++i) {
        if (w[i] == 'a') ++run;
        else if (w[i] == 'b') blocks.push_back(run), run = 0;
        else return false;
    }
    if (run != 0 || blocks.empty()) return false;  // must end the blocks with b
    const std::size_t m = w.size() - i;
    if (m == 0 || w.find_first_not_of('c', i) != std::string_view::npos) return false;
    for (std::size_t j = 1; j <= blocks.size(); ++j) {
        const std::size_t ij = blocks[j - 1];
        if (j > ij && m == j - ij) return true;
        if (j < ij && m == 1) return true;
    }
    return false;
}

bool translucent_example_language(std::string_view w) {
    std::size_t n = 0;
    while (n < w.size() && w[n] == 'b') ++n;
    std::string_view rest = w.substr(n);
    if (rest == "ca") return n >= 1;
    if (rest.empty() || rest[0] != 'a' || rest.back() != 'c') return false;
    std::string_view mid = rest.substr(1, rest.size() - 2);
    if (mid.find_first_not_of('b') != std::string_view::npos) return false;
    return n + mid.size() >= 1;
}

bool equal_ab(std::string_view w) {
    return std::count(w.begin(), w.end(), 'a') == std::count(w.begin(), w.end(), 'b');
}

} // namespace nonreg::oracle
