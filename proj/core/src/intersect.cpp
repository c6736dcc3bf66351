#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "nonreg/error.hpp"
#include "nonreg/oracle.hpp"

namespace nonreg::oracle {

namespace {

// Square boolean matrix over automaton states, rows packed in 64-bit words.
class Relation {
public:
    explicit Relation(std::size_t n = 0) : n_(n), w_((n + 63) / 64), bits_(n * w_, 0) {}

    static Relation identity(std::size_t n) {
        Relation r(n);
        for (std::size_t i = 0; i < n; ++i) r.set(i, i);
        return r;
    }

    bool get(std::size_t p, std::size_t q) const { return bits_[p * w_ + q / 64] >> (q % 64) & 1; }
    void set(std::size_t p, std::size_t q) { bits_[p * w_ + q / 64] |= std::uint64_t{1} << (q % 64); }

    Relation compose(const Relation& o) const {
        Relation r(n_);
        for (std::size_t p = 0; p < n_; ++p) {
            std::uint64_t* out = &r.bits_[p * w_];
            for (std::size_t q = 0; q < n_; ++q) {
                if (!get(p, q)) continue;
                const std::uint64_t* row = &o.bits_[q * w_];
                for (std::size_t k = 0; k < w_; ++k) out[k] |= row[k];
            }
        }
        return r;
    }

    /// Adds o's pairs; true when something was new.
    bool absorb(const Relation& o) {
        bool changed = false;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t v = bits_[i] | o.bits_[i];
            changed |= v != bits_[i];
            bits_[i] = v;
        }
        return changed;
    }

private:
    std::size_t n_, w_;
    std::vector<std::uint64_t> bits_;
};

std::string triple(const std::string& a, std::size_t p, std::size_t q) {
    return a + "[" + std::to_string(p) + "," + std::to_string(q) + "]";
}

} // namespace

cfg::Grammar intersect_grammar_nfa(const cfg::Grammar& g, const Nfa& n0) {
    const Nfa d = n0.is_deterministic() ? n0 : determinize(n0, false);
    const std::size_t size = d.size();
    const StateId init = d.initial().front();

    std::map<char, Relation> letter;
    for (char a : g.terminals) {
        Relation r(size);
        for (StateId p = 0; p < size; ++p) {
            if (auto q = d.next(p, a)) r.set(p, *q);
        }
        letter.emplace(a, std::move(r));
    }

    std::map<std::string, Relation> rel;
    for (const auto& a : g.nonterminals) rel.emplace(a, Relation(size));
    auto symbol_rel = [&](const cfg::Symbol& s) -> const Relation& {
        return s.is_terminal() ? letter.at(s.letter()) : rel.at(s.name);
    };
    auto rhs_rel = [&](const std::vector<cfg::Symbol>& rhs, std::size_t from) {
        Relation r = Relation::identity(size);
        for (std::size_t i = from; i < rhs.size(); ++i) r = r.compose(symbol_rel(rhs[i]));
        return r;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : g.rules) changed |= rel.at(r.lhs).absorb(rhs_rel(r.rhs, 0));
    }

    cfg::Grammar out;
    out.terminals = g.terminals;
    std::vector<std::size_t> finals;
    for (StateId f = 0; f < size; ++f) {
        if (d.is_accepting(f) && rel.at(g.start).get(init, f)) finals.push_back(f);
    }
    if (finals.size() == 1) {
        out.start = triple(g.start, init, finals[0]);
    } else {
        out.start = g.start + "[]";
        out.nonterminals.push_back(out.start);
    }

    std::set<std::string> known;
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> work;
    auto use = [&](const std::string& a, std::size_t p, std::size_t q) {
        std::string name = triple(a, p, q);
        if (known.insert(name).second) {
            out.nonterminals.push_back(name);
            work.emplace_back(a, p, q);
        }
        return name;
    };
    if (finals.size() != 1) {
        for (auto f : finals) {
            out.rules.push_back({out.start, {cfg::Symbol::nonterminal(use(g.start, init, f))}});
        }
    } else {
        use(g.start, init, finals[0]);
    }

    // suffix relations per rule, for pruning state sequences
    std::vector<std::vector<Relation>> suffix(g.rules.size());
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
        const auto& rhs = g.rules[i].rhs;
        suffix[i].resize(rhs.size() + 1);
        suffix[i][rhs.size()] = Relation::identity(size);
        for (std::size_t k = rhs.size(); k-- > 0;) suffix[i][k] = symbol_rel(rhs[k]).compose(suffix[i][k + 1]);
    }

    while (!work.empty()) {
        auto [a, p, q] = work.back();
        work.pop_back();
        const std::string lhs = triple(a, p, q);
        for (std::size_t i = 0; i < g.rules.size(); ++i) {
            const auto& rule = g.rules[i];
            if (rule.lhs != a || !suffix[i][0].get(p, q)) continue;
            std::vector<cfg::Symbol> rhs;
            auto expand = [&](auto&& self, std::size_t k, std::size_t at) -> void {
                if (k == rule.rhs.size()) {
                    if (at == q) out.rules.push_back({lhs, rhs});
                    return;
                }
                const auto& s = rule.rhs[k];
                const Relation& step = symbol_rel(s);
                for (StateId r = 0; r < size; ++r) {
                    if (!step.get(at, r) || !suffix[i][k + 1].get(r, q)) continue;
                    rhs.push_back(s.is_terminal() ? s : cfg::Symbol::nonterminal(use(s.name, at, r)));
                    self(self, k + 1, r);
                    rhs.pop_back();
                }
            };
            expand(expand, 0, p);
        }
    }
    return out;
}

Emptiness cfg_emptiness(const cfg::Grammar& g) {
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::map<std::string, std::size_t> len;
    for (const auto& a : g.nonterminals) len[a] = inf;
    if (!len.count(g.start)) len[g.start] = inf;

    auto rhs_len = [&](const cfg::Rule& r) {
        std::size_t total = 0;
        for (const auto& s : r.rhs) {
            std::size_t l = s.is_terminal() ? 1 : (len.count(s.name) ? len[s.name] : inf);
            if (l == inf) return inf;
            total += l;
        }
        return total;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : g.rules) {
            std::size_t l = rhs_len(r);
            if (l < len[r.lhs]) len[r.lhs] = l, changed = true;
        }
    }
    if (len[g.start] == inf) return Empty{};

    // Among shortest words the least one is built from least shortest parts.
    std::map<std::string, std::string> best;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : g.rules) {
            if (rhs_len(r) != len[r.lhs]) continue;
            std::string w;
            bool ready = true;
            for (const auto& s : r.rhs) {
                if (s.is_terminal()) {
                    w += s.letter();
                } else if (auto it = best.find(s.name); it != best.end()) {
                    w += it->second;
                } else {
                    ready = false;
                    break;
                }
            }
            if (!ready) continue;
            auto it = best.find(r.lhs);
            if (it == best.end() || w < it->second) {
                best[r.lhs] = w;
                changed = true;
            }
        }
    }
    return NonEmpty{best.at(g.start)};
}

} // namespace nonreg::oracle
