#include "nonreg/fatl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "nonreg/builtin.hpp"
#include "nonreg/error.hpp"

namespace nonreg::fatl {

std::optional<std::size_t> Fatl::state_index(std::string_view name) const {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) return std::nullopt;
    return static_cast<std::size_t>(it - states.begin());
}

void Fatl::check_word(std::string_view w) const {
    for (char c : w) {
        if (alphabet.find(c) == std::string::npos) {
            throw AlphabetError(std::string("letter '") + c + "' is not in the input alphabet");
        }
    }
}

std::vector<std::size_t> Fatl::successors(std::size_t q, char a) const {
    std::vector<std::size_t> out;
    for (const auto& t : transitions) {
        if (t.from == q && t.letter == a) out.push_back(t.to);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Fatl::translucent(std::size_t q, char a) const {
    return std::none_of(transitions.begin(), transitions.end(),
                        [&](const Transition& t) { return t.from == q && t.letter == a; });
}

bool Fatl::is_deterministic() const {
    std::set<std::pair<std::size_t, char>> seen;
    for (const auto& t : transitions) {
        if (!seen.emplace(t.from, t.letter).second) {
            // a repeated identical line is still deterministic
            if (successors(t.from, t.letter).size() > 1) return false;
        }
    }
    return true;
}

Fatl parse_fatl(std::string_view text) {
    using PE = ParseError;
    Fatl m;
    std::map<std::string, std::size_t> index;
    auto state = [&](const std::string& name) {
        auto [it, fresh] = index.emplace(name, m.states.size());
        if (fresh) m.states.push_back(name);
        return it->second;
    };
    std::optional<std::string> start;
    std::vector<std::string> finals;
    std::vector<std::tuple<std::string, char, std::string>> raw;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "start:") {
            if (toks.size() != 2) throw PE(PE::Kind::Syntax, lineno, "start line needs one state");
            start = toks[1];
        } else if (toks[0] == "final:") {
            finals.assign(toks.begin() + 1, toks.end());
        } else {
            if (toks.size() != 3 || toks[1].size() != 1 || !std::islower(static_cast<unsigned char>(toks[1][0]))) {
                throw PE(PE::Kind::Syntax, lineno, "expected 'q a p'");
            }
            raw.emplace_back(toks[0], toks[1][0], toks[2]);
        }
    }
    if (!start) throw PE(PE::Kind::UndeclaredStart, 0, "missing 'start:' line");
    m.start = state(*start);
    std::set<char> letters;
    for (const auto& [from, a, to] : raw) {
        m.transitions.push_back({state(from), a, state(to)});
        letters.insert(a);
    }
    for (const auto& f : finals) state(f);
    m.accepting.assign(m.states.size(), false);
    for (const auto& f : finals) m.accepting[index.at(f)] = true;
    m.alphabet.assign(letters.begin(), letters.end());
    return m;
}

std::string render_fatl(const Fatl& m) {
    std::ostringstream out;
    out << "start: " << m.states[m.start] << '\n' << "final:";
    for (std::size_t s = 0; s < m.states.size(); ++s) {
        if (m.accepting[s]) out << ' ' << m.states[s];
    }
    out << '\n';
    for (const auto& t : m.transitions) {
        out << m.states[t.from] << ' ' << t.letter << ' ' << m.states[t.to] << '\n';
    }
    return out.str();
}

namespace {

// delta[q][letter] as a dense table.
class Table {
public:
    explicit Table(const Fatl& m) : succ_(m.states.size() * 256) {
        for (const auto& t : m.transitions) {
            auto& v = succ_[t.from * 256 + static_cast<unsigned char>(t.letter)];
            if (std::find(v.begin(), v.end(), t.to) == v.end()) v.push_back(t.to);
        }
        for (auto& v : succ_) std::sort(v.begin(), v.end());
    }
    const std::vector<std::size_t>& operator()(std::size_t q, char a) const {
        return succ_[q * 256 + static_cast<unsigned char>(a)];
    }
    bool translucent(std::size_t q, char a) const { return (*this)(q, a).empty(); }

private:
    std::vector<std::vector<std::size_t>> succ_;
};

} // namespace

std::optional<std::size_t> jc_word(const Fatl& m, std::string_view w) {
    m.check_word(w);
    if (w.size() > max_word_length) {
        throw PreconditionError("jc_word handles words of at most 64 letters");
    }
    const Table delta(m);
    const std::size_t n = w.size();
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    // 0-1 breadth-first search over (state, consumed positions).
    using Key = std::pair<std::size_t, std::uint64_t>;
    std::map<Key, std::size_t> dist;
    std::deque<std::pair<Key, std::size_t>> work;
    dist[{m.start, 0}] = 0;
    work.push_back({{m.start, 0}, 0});
    while (!work.empty()) {
        auto [key, cost] = work.front();
        work.pop_front();
        if (dist.at(key) < cost) continue;
        auto [q, mask] = key;
        if (mask == full) {
            if (m.accepting[q]) return cost;
            continue;
        }
        // the head reads the first letter that is not translucent in q
        std::size_t first_free = n, i = 0;
        for (; i < n; ++i) {
            if (mask >> i & 1) continue;
            if (first_free == n) first_free = i;
            if (!delta.translucent(q, w[i])) break;
        }
        if (i == n) continue;
        const bool jump = i != first_free;
        const std::size_t ncost = cost + (jump ? 1 : 0);
        for (std::size_t p : delta(q, w[i])) {
            Key next{p, mask | (std::uint64_t{1} << i)};
            auto it = dist.find(next);
            if (it != dist.end() && it->second <= ncost) continue;
            dist[next] = ncost;
            if (jump) work.push_back({next, ncost});
            else work.push_front({next, ncost});
        }
    }
    return std::nullopt;
}

bool accepts(const Fatl& m, std::string_view w) {
    return jc_word(m, w).has_value();
}

Profile jc_profile(const Fatl& m, std::size_t n_max, std::size_t cap) {
    Profile prof;
    const std::string& sigma = m.alphabet;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (word_count(sigma.size(), n) > cap) {
            throw BudgetExceeded("jc_profile: too many words of length " + std::to_string(n));
        }
        std::size_t best = 0;
        if (!sigma.empty()) {
            std::vector<std::size_t> digits(n, 0);
            std::string w(n, sigma[0]);
            while (true) {
                if (auto v = jc_word(m, w)) best = std::max(best, *v);
                std::size_t i = n;
                while (i > 0 && ++digits[i - 1] == sigma.size()) digits[i - 1] = 0, w[i - 1] = sigma[0], --i;
                if (i == 0) break;
                w[i - 1] = sigma[digits[i - 1]];
            }
        }
        prof.entries[n] = best;
        prof.exhaustive_up_to = n;
    }
    return prof;
}

Nfa build_bounded_nfa(const Fatl& m, std::size_t c) {
    const Table delta(m);

    struct Pending {
        std::size_t state;  // state the jump was made in
        char letter;        // letter it consumed further right
        bool skipped;       // some letter was passed over
        auto operator<=>(const Pending&) const = default;
    };
    struct Key {
        std::size_t q;
        std::vector<Pending> pending;  // creation order
        std::size_t budget;
        auto operator<=>(const Key&) const = default;
    };

    Nfa nfa(m.alphabet);
    std::map<Key, StateId> ids;
    std::vector<Key> work;
    auto id = [&](Key k) {
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        StateId s = nfa.add_state(m.accepting[k.q] && k.pending.empty());
        ids.emplace(k, s);
        work.push_back(std::move(k));
        return s;
    };
    nfa.add_initial(id(Key{m.start, {}, c}));

    while (!work.empty()) {
        Key k = std::move(work.back());
        work.pop_back();
        const StateId from = ids.at(k);

        if (k.budget > 0) {
            for (char a : m.alphabet) {
                for (std::size_t p : delta(k.q, a)) {
                    Key next{p, k.pending, k.budget - 1};
                    next.pending.push_back({k.q, a, false});
                    nfa.add_transition(from, Nfa::epsilon, id(std::move(next)));
                }
            }
        }

        for (char x : m.alphabet) {
            // ordinary read: x was skipped by every pending jump
            bool clear = std::all_of(k.pending.begin(), k.pending.end(),
                                     [&](const Pending& o) { return delta.translucent(o.state, x); });
            if (clear) {
                for (std::size_t p : delta(k.q, x)) {
                    Key next{p, k.pending, k.budget};
                    for (auto& o : next.pending) o.skipped = true;
                    nfa.add_transition(from, x, id(std::move(next)));
                }
            }
            // the scan reaches the letter taken by pending jump i
            for (std::size_t i = 0; i < k.pending.size(); ++i) {
                const auto& o = k.pending[i];
                if (o.letter != x || !o.skipped) continue;
                bool ok = true;
                for (std::size_t j = 0; j < i && ok; ++j) ok = delta.translucent(k.pending[j].state, x);
                if (!ok) continue;
                Key next{k.q, k.pending, k.budget};
                for (std::size_t j = 0; j < i; ++j) next.pending[j].skipped = true;
                next.pending.erase(next.pending.begin() + static_cast<std::ptrdiff_t>(i));
                nfa.add_transition(from, x, id(std::move(next)));
            }
        }
    }
    return nfa;
}

Nfa zero_jump_language(const Fatl& m) {
    Nfa nfa(m.alphabet);
    for (std::size_t q = 0; q < m.states.size(); ++q) nfa.add_state(m.accepting[q]);
    for (const auto& t : m.transitions) nfa.add_transition(t.from, t.letter, t.to);
    nfa.add_initial(m.start);
    return nfa;
}

BoundCheck decide_jc_bounded(const Fatl& m, std::size_t c, std::size_t search_bound, std::size_t work_cap) {
    // Complete DFA for the words the budget automaton rejects; states from
    // which no such word is reachable are dead.
    const Nfa dfa = complement_of(build_bounded_nfa(m, c), m.alphabet);
    std::vector<bool> live(dfa.size(), false);
    for (StateId s = 0; s < dfa.size(); ++s) live[s] = dfa.is_accepting(s);
    for (bool changed = true; changed;) {
        changed = false;
        for (StateId s = 0; s < dfa.size(); ++s) {
            if (live[s]) continue;
            for (const auto& e : dfa.edges(s)) {
                if (live[e.to]) {
                    live[s] = changed = true;
                    break;
                }
            }
        }
    }

    std::size_t work = 0;
    std::string w;
    std::optional<std::string> found;
    bool capped = false;
    // depth-first in alphabet order visits each length in lexicographic order
    auto dfs = [&](auto&& self, StateId s, std::size_t len) -> void {
        if (found || capped) return;
        if (w.size() == len) {
            if (dfa.is_accepting(s) && accepts(m, w)) found = w;
            return;
        }
        for (char x : m.alphabet) {
            if (++work > work_cap) {
                capped = true;
                return;
            }
            auto t = dfa.next(s, x);
            if (!t || !live[*t]) continue;
            w.push_back(x);
            self(self, *t, len);
            w.pop_back();
            if (found || capped) return;
        }
    };
    const StateId init = dfa.initial().front();
    if (!live[init]) return Bounded{search_bound};
    for (std::size_t len = 0; len <= search_bound; ++len) {
        dfs(dfs, init, len);
        if (found) return Counterexample{*found};
        if (capped) {
            return Unknown{"search cap of " + std::to_string(work_cap) + " steps hit at length " +
                           std::to_string(len)};
        }
    }
    return Bounded{search_bound};
}

bool requires_jump(const Fatl& m, std::string_view w) {
    if (!m.is_deterministic()) throw PreconditionError("requires_jump needs a deterministic machine");
    return accepts(m, w) && !zero_jump_language(m).accepts(w);
}

Fatl build_paper_example() {
    return parse_fatl(*builtin_example("paper-fatl"));
}

Fatl build_equal_ab() {
    return parse_fatl(*builtin_example("equal-ab-fatl"));
}

} // namespace nonreg::fatl
