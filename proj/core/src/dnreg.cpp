#include "nonreg/dnreg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "nonreg/error.hpp"
#include "nonreg/oracle.hpp"

namespace nonreg::dnreg {

namespace {

std::optional<std::size_t> leftmost_nonterminal(const std::vector<cfg::Symbol>& form) {
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (!form[i].is_terminal()) return i;
    }
    return std::nullopt;
}

} // namespace

std::string replay(const cfg::Grammar& g, const Derivation& d) {
    std::vector<cfg::Symbol> form{cfg::Symbol::nonterminal(g.start)};
    for (const auto& step : d.steps) {
        if (step.rule >= g.rules.size()) throw PreconditionError("derivation step names no rule");
        auto at = leftmost_nonterminal(form);
        const auto& r = g.rules[step.rule];
        if (!at || *at != step.position || form[*at].name != r.lhs) {
            throw PreconditionError("derivation step does not rewrite the leftmost nonterminal");
        }
        form.erase(form.begin() + static_cast<std::ptrdiff_t>(*at));
        form.insert(form.begin() + static_cast<std::ptrdiff_t>(*at), r.rhs.begin(), r.rhs.end());
    }
    std::string w;
    for (const auto& s : form) {
        if (!s.is_terminal()) throw PreconditionError("derivation leaves a nonterminal");
        w += s.letter();
    }
    return w;
}

std::size_t non_regular_steps(const cfg::Grammar& g, const Derivation& d) {
    return static_cast<std::size_t>(std::count_if(d.steps.begin(), d.steps.end(), [&](const Derivation::Step& s) {
        return cfg::classify_rule(g.rules.at(s.rule)) == cfg::RuleClass::NonRegular;
    }));
}

std::optional<Derivation> least_derivation(const cfg::Grammar& g, std::string_view w) {
    if (!cfg::is_proper(g)) throw PreconditionError("least_derivation needs a proper grammar");
    g.check_word(w);
    if (w.empty()) return std::nullopt;

    // Symbols as ints: letters >= 0, nonterminal i as -(i + 1).
    std::vector<std::vector<std::size_t>> rules_of(g.nonterminals.size());
    std::vector<std::vector<int>> rhs(g.rules.size());
    std::vector<bool> costly(g.rules.size());
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
        const auto& r = g.rules[i];
        rules_of[*g.nonterminal_index(r.lhs)].push_back(i);
        for (const auto& s : r.rhs) {
            rhs[i].push_back(s.is_terminal() ? static_cast<unsigned char>(s.letter())
                                             : -static_cast<int>(*g.nonterminal_index(s.name)) - 1);
        }
        costly[i] = cfg::classify_rule(r) == cfg::RuleClass::NonRegular;
    }

    // A node is (matched prefix length, unexpanded suffix starting with a
    // nonterminal). Uniform-cost search with 0/1 costs.
    struct Node {
        std::size_t pos;
        std::vector<int> rest;
        bool operator<(const Node& o) const { return std::tie(pos, rest) < std::tie(o.pos, o.rest); }
    };
    struct Info {
        std::size_t cost;
        std::size_t parent;  // node id
        std::size_t rule;
        bool done = false;
    };
    std::map<Node, std::size_t> id;
    std::vector<Node> nodes;
    std::vector<Info> info;
    std::deque<std::size_t> work;
    auto reach = [&](Node n, std::size_t cost, std::size_t parent, std::size_t rule) {
        // match leading terminals
        std::size_t k = 0;
        while (k < n.rest.size() && n.rest[k] >= 0) {
            if (n.pos + k >= w.size() || static_cast<unsigned char>(w[n.pos + k]) != n.rest[k]) return;
            ++k;
        }
        n.pos += k;
        n.rest.erase(n.rest.begin(), n.rest.begin() + static_cast<std::ptrdiff_t>(k));
        if (n.pos + n.rest.size() > w.size()) return;  // every symbol yields a letter
        if (n.rest.empty() && n.pos != w.size()) return;
        auto [it, fresh] = id.emplace(n, nodes.size());
        if (fresh) {
            nodes.push_back(std::move(n));
            info.push_back({cost, parent, rule});
        } else if (info[it->second].cost > cost && !info[it->second].done) {
            info[it->second] = {cost, parent, rule};
        } else {
            return;
        }
        if (cost == (parent == SIZE_MAX ? 0 : info[parent].cost)) work.push_front(it->second);
        else work.push_back(it->second);
    };
    reach(Node{0, {-static_cast<int>(*g.nonterminal_index(g.start)) - 1}}, 0, SIZE_MAX, 0);

    while (!work.empty()) {
        std::size_t cur = work.front();
        work.pop_front();
        if (info[cur].done) continue;
        info[cur].done = true;
        if (nodes[cur].rest.empty()) {
            Derivation d;
            d.word = std::string(w);
            for (std::size_t n = cur; info[n].parent != SIZE_MAX; n = info[n].parent) {
                d.steps.push_back({info[n].rule, nodes[info[n].parent].pos});
            }
            std::reverse(d.steps.begin(), d.steps.end());
            return d;
        }
        const Node here = nodes[cur];
        const int a = -here.rest.front() - 1;
        for (std::size_t r : rules_of[a]) {
            Node next{here.pos, rhs[r]};
            next.rest.insert(next.rest.end(), here.rest.begin() + 1, here.rest.end());
            reach(std::move(next), info[cur].cost + (costly[r] ? 1 : 0), cur, r);
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> word_degree(const cfg::Grammar& g, std::string_view w) {
    auto d = least_derivation(g, w);
    if (!d) return std::nullopt;
    return non_regular_steps(g, *d);
}

Profile profile(const cfg::Grammar& g, std::size_t n_max, std::size_t cap) {
    Profile p;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (word_count(g.terminals.size(), n) > cap) {
            throw BudgetExceeded("dnreg profile: too many words of length " + std::to_string(n));
        }
        p.entries[n] = 0;
    }
    oracle::for_each_word(g.terminals, n_max, [&](const std::string& w) {
        if (w.empty()) return;
        if (auto v = word_degree(g, w)) p.entries[w.size()] = std::max(p.entries[w.size()], *v);
    }, SIZE_MAX);
    p.exhaustive_up_to = n_max;
    return p;
}

cfg::Grammar canonical_form(const cfg::Grammar& g) {
    return cfg::to_quasi_chomsky(cfg::to_quasi_normal_form(cfg::normalize(g)));
}

namespace {

// Quasi-CNF rules by nonterminal index.
struct Qcnf {
    struct Rule {
        char letter = 0;   // 0 for A -> B C
        int first = -1;    // B in A -> aB or A -> BC
        int second = -1;   // C in A -> BC
    };
    std::vector<std::vector<Rule>> rules;
    int start = 0;
};

Qcnf compile_qcnf(const cfg::Grammar& g) {
    if (!cfg::is_quasi_chomsky(g)) throw PreconditionError("grammar is not in quasi Chomsky normal form");
    Qcnf q;
    q.rules.resize(g.nonterminals.size());
    q.start = static_cast<int>(*g.nonterminal_index(g.start));
    for (const auto& r : g.rules) {
        Qcnf::Rule out;
        auto idx = [&](const cfg::Symbol& s) { return static_cast<int>(*g.nonterminal_index(s.name)); };
        if (r.rhs[0].is_terminal()) {
            out.letter = r.rhs[0].letter();
            if (r.rhs.size() == 2) out.first = idx(r.rhs[1]);
        } else {
            out.first = idx(r.rhs[0]);
            out.second = idx(r.rhs[1]);
        }
        q.rules[*g.nonterminal_index(r.lhs)].push_back(out);
    }
    return q;
}

using Pending = std::vector<int>;  // head first

} // namespace

BudgetNfa build_bounded_nfa(const cfg::Grammar& g, std::size_t c) {
    const Qcnf q = compile_qcnf(g);
    BudgetNfa out;
    out.nfa.extend_alphabet(g.terminals);

    std::map<std::pair<Pending, std::size_t>, StateId> ids;
    std::vector<std::pair<Pending, std::size_t>> work;
    auto id = [&](Pending s, std::size_t b) {
        auto key = std::make_pair(std::move(s), b);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        StateId st = out.nfa.add_state(key.first.empty());
        BudgetNfa::Label label;
        for (int a : key.first) label.pending.push_back(g.nonterminals[a]);
        label.budget = b;
        out.labels.push_back(std::move(label));
        ids.emplace(key, st);
        work.push_back(std::move(key));
        return st;
    };
    out.nfa.add_initial(id(Pending{q.start}, c));

    while (!work.empty()) {
        auto [sigma, b] = std::move(work.back());
        work.pop_back();
        if (sigma.empty()) continue;
        const StateId from = ids.at({sigma, b});
        const Pending tail(sigma.begin() + 1, sigma.end());
        for (const auto& r : q.rules[sigma.front()]) {
            if (r.letter != 0) {
                Pending next = tail;
                if (r.first >= 0) next.insert(next.begin(), r.first);
                out.nfa.add_transition(from, r.letter, id(std::move(next), b));
            } else if (b > 0) {
                Pending next = tail;
                next.insert(next.begin(), {r.first, r.second});
                out.nfa.add_transition(from, Nfa::epsilon, id(std::move(next), b - 1));
            }
        }
    }
    return out;
}

std::size_t bounded_nfa_state_bound(std::size_t p, std::size_t c) {
    std::size_t sum = 0, power = 1;
    for (std::size_t i = 0; i <= c + 1; ++i) {
        sum += power;
        power *= p;
    }
    return sum * (c + 1);
}

BoundDecision decide_bounded(const cfg::Grammar& g, std::size_t c) {
    const cfg::Grammar qc = canonical_form(g);
    const Nfa over = complement_of(build_bounded_nfa(qc, c).nfa, qc.terminals);
    const cfg::Grammar rest = oracle::intersect_grammar_nfa(qc, over);
    auto e = oracle::cfg_emptiness(rest);
    if (auto* ne = std::get_if<oracle::NonEmpty>(&e)) return Unbounded{ne->witness};
    return Bounded{};
}

RecognizerRun bounded_recognizer(const cfg::Grammar& g, std::string_view w, std::size_t d) {
    const Qcnf q = compile_qcnf(g);
    g.check_word(w);

    struct Triple {
        std::size_t pos;
        Pending sigma;
        std::size_t budget;
        bool operator<(const Triple& o) const {
            return std::tie(pos, sigma, budget) < std::tie(o.pos, o.sigma, o.budget);
        }
    };
    RecognizerRun run;
    std::set<Triple> seen;
    std::vector<Triple> work;
    auto visit = [&](Triple t) {
        run.max_pending = std::max(run.max_pending, t.sigma.size());
        if (seen.insert(t).second) work.push_back(std::move(t));
    };
    visit(Triple{0, {q.start}, d});
    while (!work.empty()) {
        Triple t = std::move(work.back());
        work.pop_back();
        if (t.sigma.empty()) {
            if (t.pos == w.size()) run.accepted = true;
            continue;
        }
        const Pending tail(t.sigma.begin() + 1, t.sigma.end());
        for (const auto& r : q.rules[t.sigma.front()]) {
            if (r.letter != 0) {
                if (t.pos >= w.size() || w[t.pos] != r.letter) continue;
                Pending next = tail;
                if (r.first >= 0) next.insert(next.begin(), r.first);
                visit(Triple{t.pos + 1, std::move(next), t.budget});
            } else if (t.budget > 0) {
                Pending next = tail;
                next.insert(next.begin(), {r.first, r.second});
                visit(Triple{t.pos, std::move(next), t.budget - 1});
            }
        }
    }
    run.visited = seen.size();
    return run;
}

std::size_t recognizer_visit_bound(std::size_t n, std::size_t p, std::size_t d) {
    std::size_t power = 1;
    for (std::size_t i = 0; i < d + 1; ++i) power *= p;
    return (n + 1) * (d + 1) * power;
}

} // namespace nonreg::dnreg
