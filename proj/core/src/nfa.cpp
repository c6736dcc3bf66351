#include "nonreg/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "nonreg/error.hpp"

namespace nonreg {

Nfa::Nfa(std::string alphabet) {
    extend_alphabet(alphabet);
}

StateId Nfa::add_state(bool accepting) {
    out_.emplace_back();
    accepting_.push_back(accepting);
    return out_.size() - 1;
}

void Nfa::add_transition(StateId from, char label, StateId to) {
    auto& v = out_.at(from);
    Edge e{label, to};
    auto it = std::lower_bound(v.begin(), v.end(), e);
    if (it == v.end() || *it != e) v.insert(it, e);
    if (label != epsilon && alphabet_.find(label) == std::string::npos) {
        extend_alphabet(std::string(1, label));
    }
}

void Nfa::add_initial(StateId s) {
    auto it = std::lower_bound(initial_.begin(), initial_.end(), s);
    if (it == initial_.end() || *it != s) initial_.insert(it, s);
}

void Nfa::set_accepting(StateId s, bool accepting) {
    accepting_.at(s) = accepting;
}

void Nfa::extend_alphabet(std::string_view letters) {
    std::set<char> all(alphabet_.begin(), alphabet_.end());
    for (char c : letters) {
        if (c != epsilon) all.insert(c);
    }
    alphabet_.assign(all.begin(), all.end());
}

std::size_t Nfa::transition_count() const noexcept {
    std::size_t n = 0;
    for (const auto& v : out_) n += v.size();
    return n;
}

StateSet Nfa::epsilon_closure(StateSet states) const {
    std::vector<bool> seen(size(), false);
    std::vector<StateId> stack;
    for (StateId s : states) {
        if (!seen[s]) seen[s] = true, stack.push_back(s);
    }
    StateSet out;
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        out.push_back(s);
        for (const auto& e : out_[s]) {
            if (e.label != epsilon) break;  // edges sorted, epsilon first
            if (!seen[e.to]) seen[e.to] = true, stack.push_back(e.to);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

StateSet Nfa::step(const StateSet& closed, char c) const {
    StateSet next;
    for (StateId s : closed) {
        const auto& v = out_[s];
        auto it = std::lower_bound(v.begin(), v.end(), Edge{c, 0});
        for (; it != v.end() && it->label == c; ++it) next.push_back(it->to);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return epsilon_closure(std::move(next));
}

bool Nfa::any_accepting(const StateSet& s) const {
    return std::any_of(s.begin(), s.end(), [&](StateId q) { return accepting_[q]; });
}

bool Nfa::accepts(std::string_view w) const {
    StateSet cur = initial_closure();
    for (char c : w) {
        if (cur.empty()) return false;
        cur = step(cur, c);
    }
    return any_accepting(cur);
}

bool Nfa::has_epsilon() const {
    for (const auto& v : out_) {
        if (!v.empty() && v.front().label == epsilon) return true;
    }
    return false;
}

bool Nfa::is_deterministic() const {
    if (initial_.size() != 1 || has_epsilon()) return false;
    for (const auto& v : out_) {
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i].label == v[i - 1].label) return false;
        }
    }
    return true;
}

bool Nfa::is_complete_deterministic() const {
    if (!is_deterministic()) return false;
    for (StateId s = 0; s < size(); ++s) {
        for (char c : alphabet_) {
            if (!next(s, c)) return false;
        }
    }
    return true;
}

std::optional<StateId> Nfa::next(StateId s, char c) const {
    const auto& v = out_[s];
    auto it = std::lower_bound(v.begin(), v.end(), Edge{c, 0});
    if (it != v.end() && it->label == c) return it->to;
    return std::nullopt;
}

Nfa determinize(const Nfa& n, bool complete) {
    Nfa d(n.alphabet());
    std::map<StateSet, StateId> index;
    std::deque<StateSet> work;
    auto intern = [&](StateSet s) -> StateId {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        StateId id = d.add_state(n.any_accepting(s));
        index.emplace(s, id);
        work.push_back(std::move(s));
        return id;
    };
    d.add_initial(intern(n.initial_closure()));
    std::optional<StateId> sink;
    while (!work.empty()) {
        StateSet cur = std::move(work.front());
        work.pop_front();
        StateId from = index.at(cur);
        for (char c : n.alphabet()) {
            StateSet nxt = n.step(cur, c);
            if (nxt.empty()) {
                if (!complete) continue;
                if (!sink) {
                    sink = d.add_state(false);
                    for (char a : n.alphabet()) d.add_transition(*sink, a, *sink);
                }
                d.add_transition(from, c, *sink);
            } else {
                d.add_transition(from, c, intern(std::move(nxt)));
            }
        }
    }
    return d;
}

Nfa complement(const Nfa& dfa) {
    if (!dfa.is_complete_deterministic()) {
        throw PreconditionError("complement requires a complete deterministic automaton");
    }
    Nfa c = dfa;
    for (StateId s = 0; s < c.size(); ++s) c.set_accepting(s, !dfa.is_accepting(s));
    return c;
}

Nfa complement_of(const Nfa& n, std::string_view alphabet) {
    Nfa widened = n;
    widened.extend_alphabet(alphabet);
    return complement(determinize(widened, true));
}

Nfa product_intersect(const Nfa& a, const Nfa& b) {
    Nfa p(a.alphabet());
    p.extend_alphabet(b.alphabet());
    std::map<std::pair<StateId, StateId>, StateId> index;
    std::deque<std::pair<StateId, StateId>> work;
    auto intern = [&](StateId x, StateId y) {
        auto key = std::make_pair(x, y);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        StateId id = p.add_state(a.is_accepting(x) && b.is_accepting(y));
        index.emplace(key, id);
        work.push_back(key);
        return id;
    };
    for (StateId x : a.initial()) {
        for (StateId y : b.initial()) p.add_initial(intern(x, y));
    }
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        StateId from = index.at({x, y});
        // Epsilon moves interleave: either side may move alone.
        for (const auto& e : a.edges(x)) {
            if (e.label == Nfa::epsilon) p.add_transition(from, Nfa::epsilon, intern(e.to, y));
        }
        for (const auto& e : b.edges(y)) {
            if (e.label == Nfa::epsilon) p.add_transition(from, Nfa::epsilon, intern(x, e.to));
        }
        for (const auto& ea : a.edges(x)) {
            if (ea.label == Nfa::epsilon) continue;
            for (const auto& eb : b.edges(y)) {
                if (eb.label == ea.label) p.add_transition(from, ea.label, intern(ea.to, eb.to));
            }
        }
    }
    return p;
}

Nfa unite(const Nfa& a, const Nfa& b) {
    Nfa u(a.alphabet());
    u.extend_alphabet(b.alphabet());
    auto copy = [&u](const Nfa& src) {
        StateId base = u.size();
        for (StateId s = 0; s < src.size(); ++s) u.add_state(src.is_accepting(s));
        for (StateId s = 0; s < src.size(); ++s) {
            for (const auto& e : src.edges(s)) u.add_transition(base + s, e.label, base + e.to);
        }
        for (StateId s : src.initial()) u.add_initial(base + s);
    };
    copy(a);
    copy(b);
    return u;
}

bool is_empty(const Nfa& n) {
    std::vector<bool> seen(n.size(), false);
    std::vector<StateId> stack(n.initial().begin(), n.initial().end());
    for (StateId s : stack) seen[s] = true;
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        if (n.is_accepting(s)) return false;
        for (const auto& e : n.edges(s)) {
            if (!seen[e.to]) seen[e.to] = true, stack.push_back(e.to);
        }
    }
    return true;
}

std::optional<std::string> smallest_accepted(const Nfa& n) {
    // BFS over subsets in lexicographic letter order gives the length-lex
    // smallest word for each subset first.
    std::set<StateSet> seen;
    std::deque<std::pair<StateSet, std::string>> work;
    StateSet init = n.initial_closure();
    seen.insert(init);
    work.emplace_back(std::move(init), std::string{});
    while (!work.empty()) {
        auto [cur, word] = std::move(work.front());
        work.pop_front();
        if (n.any_accepting(cur)) return word;
        for (char c : n.alphabet()) {
            StateSet nxt = n.step(cur, c);
            if (nxt.empty() || !seen.insert(nxt).second) continue;
            work.emplace_back(std::move(nxt), word + c);
        }
    }
    return std::nullopt;
}

std::vector<std::string> accepted_words(const Nfa& n, std::size_t max_len) {
    std::vector<std::string> out;
    std::string word;
    auto dfs = [&](auto& self, const StateSet& s) -> void {
        if (n.any_accepting(s)) out.push_back(word);
        if (word.size() == max_len) return;
        for (char c : n.alphabet()) {
            StateSet t = n.step(s, c);
            if (t.empty()) continue;
            word.push_back(c);
            self(self, t);
            word.pop_back();
        }
    };
    dfs(dfs, n.initial_closure());
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

bool equivalent_up_to(const Nfa& a, const Nfa& b, std::size_t max_len) {
    Nfa wa = a, wb = b;
    wa.extend_alphabet(b.alphabet());
    wb.extend_alphabet(a.alphabet());
    return accepted_words(wa, max_len) == accepted_words(wb, max_len);
}

} // namespace nonreg
