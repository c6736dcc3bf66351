#include "nonreg/pda.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "nonreg/error.hpp"

namespace nonreg::pda {

MoveKind classify(const Transition& t) {
    if (t.write.empty()) return MoveKind::Pop;
    if (t.write.size() == 1) return MoveKind::Neutral;
    return MoveKind::Push;
}

std::optional<std::size_t> Pda::state_index(std::string_view name) const {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) return std::nullopt;
    return static_cast<std::size_t>(it - states.begin());
}

void Pda::check_word(std::string_view w) const {
    for (char c : w) {
        if (input_alphabet.find(c) == std::string::npos) {
            throw AlphabetError(std::string("letter '") + c + "' is not in the input alphabet");
        }
    }
}

namespace {

using PE = ParseError;

std::vector<std::string> tokens(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

bool valid_stack_symbol(char c) {
    return std::isgraph(static_cast<unsigned char>(c)) && c != '_' && c != '|';
}

std::string sorted_unique(const std::set<char>& s) {
    return std::string(s.begin(), s.end());
}

} // namespace

Pda parse_pda(std::string_view text) {
    Pda p;
    std::optional<Mode> mode;
    std::optional<std::string> start;
    std::optional<char> stack_start;
    std::vector<std::string> finals;
    struct RawTransition {
        std::string from, to;
        char input, top;
        std::string write;
    };
    std::vector<RawTransition> raw;
    std::map<std::string, std::size_t> index;
    auto state = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        index.emplace(name, p.states.size());
        p.states.push_back(name);
        return p.states.size() - 1;
    };

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "mode:") {
            if (toks.size() != 2) throw PE(PE::Kind::Syntax, lineno, "mode line needs one value");
            if (toks[1] == "empty-stack") mode = Mode::EmptyStack;
            else if (toks[1] == "final-state") mode = Mode::FinalState;
            else throw PE(PE::Kind::Syntax, lineno, "unknown mode '" + toks[1] + "'");
        } else if (toks[0] == "start:") {
            if (toks.size() != 2) throw PE(PE::Kind::Syntax, lineno, "start line needs one state");
            start = toks[1];
        } else if (toks[0] == "stack-start:") {
            if (toks.size() != 2 || toks[1].size() != 1 || !valid_stack_symbol(toks[1][0])) {
                throw PE(PE::Kind::Syntax, lineno, "stack-start must be one stack symbol");
            }
            stack_start = toks[1][0];
        } else if (toks[0] == "final:") {
            finals.assign(toks.begin() + 1, toks.end());
        } else {
            // q a Z -> p W
            if (toks.size() != 6 || toks[3] != "->") {
                throw PE(PE::Kind::Syntax, lineno, "expected 'q a Z -> p W'");
            }
            RawTransition t;
            t.from = toks[0];
            t.to = toks[4];
            if (toks[1] == "_") t.input = epsilon;
            else if (toks[1].size() == 1 && std::islower(static_cast<unsigned char>(toks[1][0])))
                t.input = toks[1][0];
            else throw PE(PE::Kind::Syntax, lineno, "input must be a lowercase letter or '_'");
            if (toks[2].size() != 1 || !valid_stack_symbol(toks[2][0])) {
                throw PE(PE::Kind::Syntax, lineno, "stack top must be one stack symbol");
            }
            t.top = toks[2][0];
            if (toks[5] != "_") {
                if (!std::all_of(toks[5].begin(), toks[5].end(), valid_stack_symbol)) {
                    throw PE(PE::Kind::Syntax, lineno, "bad stack word '" + toks[5] + "'");
                }
                t.write = toks[5];
            }
            if (t.write.size() > max_stack_word) {
                throw PE(PE::Kind::Syntax, lineno, "stack word longer than 8 symbols");
            }
            raw.push_back(std::move(t));
        }
    }
    if (!mode) throw PE(PE::Kind::Syntax, 0, "missing 'mode:' line");
    if (!start) throw PE(PE::Kind::UndeclaredStart, 0, "missing 'start:' line");
    if (!stack_start) throw PE(PE::Kind::Syntax, 0, "missing 'stack-start:' line");

    p.mode = *mode;
    p.start = state(*start);
    p.stack_start = *stack_start;
    std::set<char> inputs, stack{*stack_start};
    for (const auto& t : raw) {
        Transition tr{state(t.from), t.input, t.top, state(t.to), t.write};
        if (t.input != epsilon) inputs.insert(t.input);
        stack.insert(t.top);
        stack.insert(t.write.begin(), t.write.end());
        p.transitions.push_back(std::move(tr));
    }
    for (const auto& f : finals) state(f);
    p.accepting.assign(p.states.size(), false);
    for (const auto& f : finals) p.accepting[index.at(f)] = true;
    p.input_alphabet = sorted_unique(inputs);
    p.stack_alphabet = sorted_unique(stack);
    return p;
}

std::string render_pda(const Pda& p) {
    std::ostringstream out;
    out << "mode: " << (p.mode == Mode::EmptyStack ? "empty-stack" : "final-state") << '\n';
    out << "start: " << p.states[p.start] << '\n';
    out << "stack-start: " << p.stack_start << '\n';
    out << "final:";
    for (std::size_t s = 0; s < p.states.size(); ++s) {
        if (p.accepting[s]) out << ' ' << p.states[s];
    }
    out << '\n';
    for (const auto& t : p.transitions) {
        out << p.states[t.from] << ' ' << (t.input == epsilon ? '_' : t.input) << ' ' << t.top
            << " -> " << p.states[t.to] << ' ' << (t.write.empty() ? std::string("_") : t.write)
            << '\n';
    }
    return out.str();
}

std::size_t default_push_cap(std::size_t n) {
    return 4 * n + 16;
}

namespace {

// Configuration key: stack stored bottom-first so the top is back().
struct Config {
    std::size_t state;
    std::size_t pos;
    std::string stack;
    bool operator==(const Config&) const = default;
};

struct ConfigHash {
    std::size_t operator()(const Config& c) const noexcept {
        std::size_t h = std::hash<std::string>{}(c.stack);
        h ^= c.state * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= c.pos * 0xc2b2ae3d27d4eb4fULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace

PushSearch push_search(const Pda& p, std::string_view w, std::optional<std::size_t> push_cap) {
    p.check_word(w);
    const std::size_t cap = push_cap.value_or(default_push_cap(w.size()));

    // Transitions grouped by (state, top) for quick lookup.
    std::map<std::pair<std::size_t, char>, std::vector<const Transition*>> by_key;
    for (const auto& t : p.transitions) by_key[{t.from, t.top}].push_back(&t);

    auto accepting = [&](const Config& c) {
        if (c.pos != w.size()) return false;
        return p.mode == Mode::EmptyStack ? c.stack.empty() : static_cast<bool>(p.accepting[c.state]);
    };

    PushSearch result;
    std::unordered_map<Config, std::size_t, ConfigHash> dist;
    std::deque<std::pair<Config, std::size_t>> work;
    Config init{p.start, 0, std::string(1, p.stack_start)};
    dist.emplace(init, 0);
    work.emplace_back(std::move(init), 0);

    while (!work.empty()) {
        auto [cur, cost] = std::move(work.front());
        work.pop_front();
        if (dist.at(cur) < cost) continue;
        if (accepting(cur)) {
            result.pushes = cost;
            return result;
        }
        if (cur.stack.empty()) continue;
        auto it = by_key.find({cur.state, cur.stack.back()});
        if (it == by_key.end()) continue;
        for (const Transition* t : it->second) {
            Config next{t->to, cur.pos, cur.stack};
            if (t->input != epsilon) {
                if (cur.pos >= w.size() || w[cur.pos] != t->input) continue;
                next.pos = cur.pos + 1;
            }
            next.stack.pop_back();
            next.stack.append(t->write.rbegin(), t->write.rend());
            const bool push = classify(*t) == MoveKind::Push;
            const std::size_t ncost = cost + (push ? 1 : 0);
            if (ncost > cap) {
                result.exceeded = true;
                continue;
            }
            auto [pos, inserted] = dist.try_emplace(next, ncost);
            if (!inserted) {
                if (pos->second <= ncost) continue;
                pos->second = ncost;
            }
            if (push) work.emplace_back(std::move(next), ncost);
            else work.emplace_front(std::move(next), ncost);
        }
    }
    return result;
}

std::optional<std::size_t> push_word(const Pda& p, std::string_view w) {
    auto r = push_search(p, w);
    if (!r.pushes && r.exceeded) {
        throw BudgetExceeded("push search cap reached for word '" + std::string(w) + "'");
    }
    return r.pushes;
}

bool accepts(const Pda& p, std::string_view w) {
    return push_word(p, w).has_value();
}

Profile push_profile(const Pda& p, std::size_t n_max, std::size_t cap) {
    Profile prof;
    const std::string& sigma = p.input_alphabet;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (word_count(sigma.size(), n) > cap) {
            throw BudgetExceeded("push_profile: too many words of length " + std::to_string(n));
        }
        std::size_t best = 0;
        if (!sigma.empty()) {
            std::vector<std::size_t> digits(n, 0);
            std::string w(n, sigma[0]);
            while (true) {
                if (auto v = push_word(p, w)) best = std::max(best, *v);
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

Pda convert_mode(const Pda& p, Mode to) {
    // Fresh characters for bottom-marked twins.
    static constexpr std::string_view pool =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789abcdefghijklmnopqrstuvwxyz$%&*+=@^~!?<>";
    std::map<char, char> twin;
    std::set<char> used(p.stack_alphabet.begin(), p.stack_alphabet.end());
    for (char y : p.stack_alphabet) {
        auto it = std::find_if(pool.begin(), pool.end(), [&](char c) { return !used.count(c); });
        if (it == pool.end()) throw PreconditionError("stack alphabet too large to mark bottoms");
        twin[y] = *it;
        used.insert(*it);
    }

    Pda out;
    out.mode = to;
    out.states = p.states;
    out.accepting.assign(p.states.size(), false);
    out.input_alphabet = p.input_alphabet;
    out.start = p.start;
    out.stack_start = twin.at(p.stack_start);

    auto fresh_state = [&](const std::string& base) {
        std::string name = base;
        while (std::find(out.states.begin(), out.states.end(), name) != out.states.end()) name += '\'';
        out.states.push_back(name);
        out.accepting.push_back(false);
        return out.states.size() - 1;
    };

    std::optional<std::size_t> sink;  // empty-stack -> final-state: bottom popped
    std::optional<std::size_t> drain; // final-state -> empty-stack: empty after final

    for (const auto& t : p.transitions) {
        out.transitions.push_back(t);  // unmarked top: unchanged
        Transition m = t;
        m.top = twin.at(t.top);
        if (!t.write.empty()) {
            m.write.back() = twin.at(t.write.back());
            out.transitions.push_back(std::move(m));
            continue;
        }
        // The source stack becomes empty in state t.to.
        if (p.mode == Mode::EmptyStack && to == Mode::FinalState) {
            if (!sink) sink = fresh_state("acc");
            m.to = *sink;
            out.transitions.push_back(std::move(m));
        } else if (p.mode == Mode::FinalState && to == Mode::EmptyStack) {
            if (p.accepting[t.to]) out.transitions.push_back(std::move(m));
        } else {
            out.transitions.push_back(std::move(m));
        }
    }

    if (to == Mode::FinalState) {
        if (p.mode == Mode::FinalState) {
            out.accepting = p.accepting;
            out.accepting.resize(out.states.size(), false);
        }
        if (sink) out.accepting[*sink] = true;
    } else if (p.mode == Mode::FinalState) {
        std::string all = p.stack_alphabet;
        for (const auto& [y, t] : twin) all.push_back(t);
        for (std::size_t q = 0; q < p.states.size(); ++q) {
            if (!p.accepting[q]) continue;
            if (!drain) drain = fresh_state("drain");
            for (char y : all) out.transitions.push_back(Transition{q, epsilon, y, *drain, ""});
        }
        if (drain) {
            for (char y : all) out.transitions.push_back(Transition{*drain, epsilon, y, *drain, ""});
        }
    }

    std::set<char> stack;
    for (const auto& t : out.transitions) {
        stack.insert(t.top);
        stack.insert(t.write.begin(), t.write.end());
    }
    stack.insert(out.stack_start);
    out.stack_alphabet = std::string(stack.begin(), stack.end());
    return out;
}

} // namespace nonreg::pda
