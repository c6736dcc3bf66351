#include "nonreg/efa.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "nonreg/builtin.hpp"
#include "nonreg/error.hpp"

namespace nonreg::efa {

std::optional<std::size_t> Efa::state_index(std::string_view name) const {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) return std::nullopt;
    return static_cast<std::size_t>(it - states.begin());
}

void Efa::check_word(std::string_view w) const {
    for (char c : w) {
        if (alphabet.find(c) == std::string::npos) {
            throw AlphabetError(std::string("letter '") + c + "' is not in the input alphabet");
        }
    }
}

Efa parse_efa(std::string_view text) {
    using PE = ParseError;
    Efa a;
    std::map<std::string, std::size_t> index;
    auto state = [&](const std::string& name) {
        auto [it, fresh] = index.emplace(name, a.states.size());
        if (fresh) a.states.push_back(name);
        return it->second;
    };
    std::optional<std::string> start;
    std::vector<std::string> finals;
    struct Raw {
        std::string from, to, label;
        char letter;
        std::size_t line;
    };
    std::vector<Raw> raw;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "group:") {
            std::string rest;
            std::getline(ls, rest);
            try {
                a.group = std::make_shared<const group::GroupSpec>(group::parse_spec(rest));
            } catch (const PE& e) {
                throw PE(PE::Kind::Syntax, lineno, e.what());
            }
        } else if (head == "start:") {
            std::string s, extra;
            if (!(ls >> s) || (ls >> extra)) throw PE(PE::Kind::Syntax, lineno, "start line needs one state");
            start = s;
        } else if (head == "final:") {
            std::string s;
            while (ls >> s) finals.push_back(s);
        } else {
            Raw r;
            r.from = head;
            std::string letter;
            if (!(ls >> letter >> r.to) || letter.size() != 1 ||
                !std::islower(static_cast<unsigned char>(letter[0]))) {
                throw PE(PE::Kind::Syntax, lineno, "expected 'q a p <element>'");
            }
            r.letter = letter[0];
            std::getline(ls, r.label);
            r.line = lineno;
            raw.push_back(std::move(r));
        }
    }
    if (!a.group) throw PE(PE::Kind::Syntax, 0, "missing 'group:' line");
    if (!start) throw PE(PE::Kind::UndeclaredStart, 0, "missing 'start:' line");

    a.start = state(*start);
    std::set<char> letters;
    for (auto& r : raw) {
        Transition t;
        t.from = state(r.from);
        t.letter = r.letter;
        t.to = state(r.to);
        try {
            t.label = group::parse_element(a.group, r.label);
        } catch (const PE& e) {
            throw PE(PE::Kind::Syntax, r.line, e.what());
        }
        letters.insert(r.letter);
        a.transitions.push_back(std::move(t));
    }
    for (const auto& f : finals) state(f);
    a.accepting.assign(a.states.size(), false);
    for (const auto& f : finals) a.accepting[index.at(f)] = true;
    a.alphabet.assign(letters.begin(), letters.end());
    return a;
}

std::string render_efa(const Efa& a) {
    std::ostringstream out;
    out << "group: " << group::render_spec(*a.group) << '\n';
    out << "start: " << a.states[a.start] << '\n';
    out << "final:";
    for (std::size_t s = 0; s < a.states.size(); ++s) {
        if (a.accepting[s]) out << ' ' << a.states[s];
    }
    out << '\n';
    for (const auto& t : a.transitions) {
        out << a.states[t.from] << ' ' << t.letter << ' ' << a.states[t.to] << ' '
            << group::render_element(t.label) << '\n';
    }
    return out.str();
}

namespace {

// Register values and transition labels interned as small integers, with
// memoized multiplication.
class Engine {
public:
    explicit Engine(const Efa& a) {
        identity_ = intern(group::identity(a.group));
        moves_.resize(a.states.size() * 256);
        for (const auto& t : a.transitions) {
            std::uint32_t l = intern(t.label);
            moves_[t.from * 256 + static_cast<unsigned char>(t.letter)].push_back({t.to, l});
            max_label_norm_ = std::max(max_label_norm_, norms_[l]);
            if (l != identity_) labels_.insert(l);
        }
    }

    struct Move {
        std::size_t to;
        std::uint32_t label;
    };

    const std::vector<Move>& moves(std::size_t q, char x) const {
        return moves_[q * 256 + static_cast<unsigned char>(x)];
    }

    std::uint32_t identity() const { return identity_; }
    bool is_identity(std::uint32_t r) const { return r == identity_; }
    std::size_t norm(std::uint32_t r) const { return norms_[r]; }
    std::size_t max_label_norm() const { return max_label_norm_; }
    std::size_t distinct_labels() const { return labels_.size(); }
    std::size_t values() const { return values_.size(); }

    std::uint32_t times(std::uint32_t r, std::uint32_t l) {
        if (l == identity_) return r;
        std::uint64_t key = (std::uint64_t{r} << 32) | l;
        auto it = products_.find(key);
        if (it != products_.end()) return it->second;
        std::uint32_t v = intern(group::mul(values_[r], values_[l]));
        products_.emplace(key, v);
        return v;
    }

private:
    std::uint32_t intern(const group::Element& e) {
        auto [it, fresh] = ids_.emplace(e, static_cast<std::uint32_t>(values_.size()));
        if (fresh) {
            values_.push_back(e);
            norms_.push_back(e.norm());
        }
        return it->second;
    }

    std::unordered_map<group::Element, std::uint32_t, group::ElementHash> ids_;
    std::vector<group::Element> values_;
    std::vector<std::size_t> norms_;
    std::unordered_map<std::uint64_t, std::uint32_t> products_;
    std::vector<std::vector<Move>> moves_;
    std::set<std::uint32_t> labels_;
    std::uint32_t identity_ = 0;
    std::size_t max_label_norm_ = 0;
};

std::uint64_t config_key(std::size_t q, std::uint32_t r) {
    return (std::uint64_t{q} << 32) | r;
}

} // namespace

std::optional<std::size_t> gmc_word(const Efa& a, std::string_view w) {
    a.check_word(w);
    Engine eng(a);
    std::unordered_map<std::uint64_t, std::size_t> layer{{config_key(a.start, eng.identity()), 0}};
    for (char x : w) {
        std::unordered_map<std::uint64_t, std::size_t> next;
        for (const auto& [key, cost] : layer) {
            auto q = static_cast<std::size_t>(key >> 32);
            auto r = static_cast<std::uint32_t>(key);
            for (const auto& m : eng.moves(q, x)) {
                std::size_t c = cost + (eng.is_identity(m.label) ? 0 : 1);
                auto [it, fresh] = next.emplace(config_key(m.to, eng.times(r, m.label)), c);
                if (!fresh) it->second = std::min(it->second, c);
            }
        }
        layer = std::move(next);
        if (layer.empty()) return std::nullopt;
    }
    std::optional<std::size_t> best;
    for (const auto& [key, cost] : layer) {
        auto q = static_cast<std::size_t>(key >> 32);
        if (a.accepting[q] && eng.is_identity(static_cast<std::uint32_t>(key)) && (!best || cost < *best)) {
            best = cost;
        }
    }
    return best;
}

bool accepts(const Efa& a, std::string_view w) {
    return gmc_word(a, w).has_value();
}

namespace {

// reach[r][q]: some path of exactly r moves leads from q to an accepting state.
std::vector<std::vector<bool>> exact_reach(const Efa& a, std::size_t horizon) {
    std::vector<std::vector<bool>> reach(horizon + 1, std::vector<bool>(a.states.size(), false));
    reach[0] = a.accepting;
    for (std::size_t r = 1; r <= horizon; ++r) {
        for (const auto& t : a.transitions) {
            if (reach[r - 1][t.to]) reach[r][t.from] = true;
        }
    }
    return reach;
}

struct Entry {
    std::uint32_t state;
    std::uint32_t reg;
    std::uint32_t cost;
    bool operator==(const Entry&) const = default;
};
using ConfigMap = std::vector<Entry>;  // sorted by (state, reg)

struct MapHash {
    std::size_t operator()(const ConfigMap& m) const noexcept {
        std::size_t h = m.size();
        for (const auto& e : m) {
            std::uint64_t v = (std::uint64_t{e.state} << 40) ^ (std::uint64_t{e.reg} << 12) ^ e.cost;
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace

namespace {

struct Sweep {
    const Efa& a;
    Engine& eng;
    std::size_t n_max;
    std::vector<std::vector<bool>> reach;
    bool to_the_end = false;  // keep only configurations that can accept at length n_max

    // Some completion of length r <= n_max - t reaches an accepting state
    // and is long enough to undo the register.
    bool viable(std::size_t q, std::uint32_t reg, std::size_t t) const {
        std::size_t need = 0;
        if (eng.norm(reg) > 0) {
            if (eng.max_label_norm() == 0) return false;
            need = (eng.norm(reg) + eng.max_label_norm() - 1) / eng.max_label_norm();
        }
        if (to_the_end) return need + t <= n_max && reach[n_max - t][q];
        for (std::size_t r = need; r + t <= n_max; ++r) {
            if (reach[r][q]) return true;
        }
        return false;
    }

    // Per-length maxima over the maps explored. With `beam` > 0 only the
    // `beam` maps with the largest cheapest cost survive each layer, so the
    // values are attained by real words but may fall short of the maxima.
    // Maps are kept with their cheapest cost subtracted; two words reaching
    // the same shifted map only differ by that offset, so the larger wins.
    using Layer = std::unordered_map<ConfigMap, std::uint32_t, MapHash>;
    std::size_t truncated_at = 0;  // first layer the beam cut, 0 if none

    std::vector<std::size_t> run(std::size_t cap, std::size_t beam) {
        std::vector<std::size_t> best(n_max + 1, 0);
        Layer layer{{ConfigMap{{static_cast<std::uint32_t>(a.start), eng.identity(), 0}}, 0}};
        std::unordered_map<std::uint64_t, std::uint32_t> acc;
        for (std::size_t n = 1; n <= n_max; ++n) {
            Layer next;
            for (const auto& [m, base] : layer) {
                for (char x : a.alphabet) {
                    acc.clear();
                    for (const auto& e : m) {
                        for (const auto& mv : eng.moves(e.state, x)) {
                            std::uint32_t c = e.cost + (eng.is_identity(mv.label) ? 0 : 1);
                            std::uint32_t reg = eng.times(e.reg, mv.label);
                            if (!viable(mv.to, reg, n)) continue;
                            auto [it, fresh] = acc.emplace(config_key(mv.to, reg), c);
                            if (!fresh) it->second = std::min(it->second, c);
                        }
                    }
                    if (acc.empty()) continue;
                    std::uint32_t lo = UINT32_MAX, done = UINT32_MAX;
                    ConfigMap nm;
                    nm.reserve(acc.size());
                    for (const auto& [key, c] : acc) {
                        Entry e{static_cast<std::uint32_t>(key >> 32), static_cast<std::uint32_t>(key), c};
                        lo = std::min(lo, c);
                        if (a.accepting[e.state] && eng.is_identity(e.reg)) done = std::min(done, c);
                        nm.push_back(e);
                    }
                    if (done != UINT32_MAX) best[n] = std::max<std::size_t>(best[n], base + done);
                    for (auto& e : nm) e.cost -= lo;
                    std::uint32_t nb = base + lo;
                    std::sort(nm.begin(), nm.end(), [](const Entry& l, const Entry& r) {
                        return std::tie(l.state, l.reg) < std::tie(r.state, r.reg);
                    });
                    auto [it, fresh] = next.emplace(std::move(nm), nb);
                    if (!fresh) it->second = std::max(it->second, nb);
                    if (!beam && next.size() > cap) {
                        throw BudgetExceeded("gmc_profile: more than " + std::to_string(cap) +
                                             " configuration maps at length " + std::to_string(n));
                    }
                }
            }
            if (beam && next.size() > beam) {
                if (!truncated_at) truncated_at = n;
                std::vector<std::pair<ConfigMap, std::uint32_t>> v(next.begin(), next.end());
                std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
                    if (l.second != r.second) return l.second > r.second;
                    return std::lexicographical_compare(
                        l.first.begin(), l.first.end(), r.first.begin(), r.first.end(),
                        [](const Entry& x, const Entry& y) {
                            return std::tie(x.state, x.reg, x.cost) < std::tie(y.state, y.reg, y.cost);
                        });
                });
                // round robin over the sets of occupied states, so one kind of
                // prefix cannot crowd out the others
                std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> by_shape;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    std::vector<std::uint32_t> shape;
                    for (const auto& e : v[i].first) shape.push_back(e.state);
                    shape.erase(std::unique(shape.begin(), shape.end()), shape.end());
                    by_shape[shape].push_back(i);
                }
                std::vector<std::pair<ConfigMap, std::uint32_t>> kept;
                for (std::size_t round = 0; kept.size() < beam; ++round) {
                    for (const auto& [shape, idx] : by_shape) {
                        if (round < idx.size() && kept.size() < beam) kept.push_back(std::move(v[idx[round]]));
                    }
                }
                v = std::move(kept);
                next = Layer(v.begin(), v.end());
            }
            layer = std::move(next);
        }
        return best;
    }
};

} // namespace

Profile gmc_profile(const Efa& a, std::size_t n_max, std::size_t cap) {
    Engine eng(a);
    Sweep sweep{a, eng, n_max, exact_reach(a, n_max)};
    const auto best = sweep.run(cap, 0);
    Profile prof;
    for (std::size_t n = 1; n <= n_max; ++n) prof.entries[n] = best[n];
    prof.exhaustive_up_to = n_max;
    return prof;
}

Profile gmc_lower_profile(const Efa& a, std::size_t n_max, std::size_t beam) {
    if (beam == 0) throw PreconditionError("gmc_lower_profile: beam must be positive");
    Engine eng(a);
    const auto reach = exact_reach(a, n_max);
    Profile prof;
    prof.exhaustive_up_to = n_max;
    // one sweep per target length, so the beam never spends its room on
    // words that cannot be completed to exactly that length
    for (std::size_t n = 1; n <= n_max; ++n) {
        Sweep sweep{a, eng, n, reach, true};
        prof.entries[n] = sweep.run(0, beam)[n];
        if (sweep.truncated_at && prof.exhaustive_up_to == n_max) prof.exhaustive_up_to = n - 1;
    }
    return prof;
}

BudgetNfa build_bounded_nfa(const Efa& a, std::size_t c) {
    Engine eng(a);
    BudgetNfa out;
    out.nfa.extend_alphabet(a.alphabet);

    struct Key {
        std::size_t q;
        std::uint32_t reg;
        std::size_t b;
        auto operator<=>(const Key&) const = default;
    };
    std::map<Key, StateId> ids;
    std::vector<Key> work;
    std::set<std::uint32_t> regs;
    auto id = [&](const Key& k) {
        auto [it, fresh] = ids.emplace(k, 0);
        if (fresh) {
            it->second = out.nfa.add_state(a.accepting[k.q] && eng.is_identity(k.reg));
            work.push_back(k);
            regs.insert(k.reg);
        }
        return it->second;
    };
    out.nfa.add_initial(id(Key{a.start, eng.identity(), c}));
    while (!work.empty()) {
        Key k = work.back();
        work.pop_back();
        StateId from = ids.at(k);
        for (char x : a.alphabet) {
            for (const auto& mv : eng.moves(k.q, x)) {
                if (eng.is_identity(mv.label)) {
                    out.nfa.add_transition(from, x, id(Key{mv.to, k.reg, k.b}));
                } else if (k.b > 0) {
                    out.nfa.add_transition(from, x, id(Key{mv.to, eng.times(k.reg, mv.label), k.b - 1}));
                }
            }
        }
    }
    out.register_values = regs.size();
    out.distinct_labels = eng.distinct_labels();
    return out;
}

BoundCheck check_gmc_bounded(const Efa& a, std::size_t c, std::size_t search_bound, std::size_t work_cap) {
    const Nfa bounded = build_bounded_nfa(a, c).nfa;
    Engine eng(a);
    const auto reach = exact_reach(a, search_bound);

    auto viable = [&](std::size_t q, std::uint32_t reg, std::size_t t) {
        std::size_t need = 0;
        if (eng.norm(reg) > 0) {
            if (eng.max_label_norm() == 0) return false;
            need = (eng.norm(reg) + eng.max_label_norm() - 1) / eng.max_label_norm();
        }
        for (std::size_t r = need; r + t <= search_bound; ++r) {
            if (reach[r][q]) return true;
        }
        return false;
    };

    // A node is the set of live EFA configurations together with the
    // subset of the budget automaton reached by the same word. Breadth-first
    // expansion in alphabet order meets nodes along length-lex least words.
    struct Node {
        std::vector<std::uint64_t> configs;  // sorted
        StateSet budget;
        bool operator==(const Node&) const = default;
    };
    struct NodeHash {
        std::size_t operator()(const Node& n) const noexcept {
            std::size_t h = 0;
            for (auto v : n.configs) h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            for (auto v : n.budget) h ^= v + 0x517cc1b727220a95ULL + (h << 6) + (h >> 2);
            return h;
        }
    };

    auto hit = [&](const Node& n) {
        if (bounded.any_accepting(n.budget)) return false;
        for (auto key : n.configs) {
            if (a.accepting[key >> 32] && eng.is_identity(static_cast<std::uint32_t>(key))) return true;
        }
        return false;
    };

    Node root{{config_key(a.start, eng.identity())}, bounded.initial_closure()};
    if (hit(root)) return Counterexample{""};
    std::unordered_set<Node, NodeHash> seen{root};
    std::vector<std::pair<Node, std::string>> frontier{{root, ""}};
    for (std::size_t len = 1; len <= search_bound && !frontier.empty(); ++len) {
        std::vector<std::pair<Node, std::string>> next;
        for (const auto& [node, word] : frontier) {
            for (char x : a.alphabet) {
                Node n;
                for (auto key : node.configs) {
                    auto q = static_cast<std::size_t>(key >> 32);
                    auto reg = static_cast<std::uint32_t>(key);
                    for (const auto& mv : eng.moves(q, x)) {
                        std::uint32_t r = eng.times(reg, mv.label);
                        if (viable(mv.to, r, len)) n.configs.push_back(config_key(mv.to, r));
                    }
                }
                if (n.configs.empty()) continue;
                std::sort(n.configs.begin(), n.configs.end());
                n.configs.erase(std::unique(n.configs.begin(), n.configs.end()), n.configs.end());
                n.budget = bounded.step(node.budget, x);
                if (!seen.insert(n).second) continue;
                std::string w = word + x;
                if (hit(n)) return Counterexample{w};
                if (seen.size() > work_cap) {
                    return Unknown{"explored " + std::to_string(work_cap) + " nodes up to length " +
                                   std::to_string(len)};
                }
                next.emplace_back(std::move(n), std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return Bounded{search_bound};
}

Efa build_anbn_efa() {
    return parse_efa(*builtin_example("anbn-efa"));
}

Efa build_sqrt_efa() {
    return parse_efa(*builtin_example("sqrt-efa"));
}

} // namespace nonreg::efa
