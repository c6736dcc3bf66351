#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "nonreg/group.hpp"

namespace nonreg::fixture {

inline std::vector<group::GroupSpec> law_specs() {
    using namespace group;
    return {zk(1), zk(3), zmod(2), zmod(7), free_group(1), free_group(2), free_group(3),
            product({zk(1), zmod(2)}), product({free_group(2), zk(2), zmod(3)})};
}

// Free words as arbitrary letter sequences; not reduced.
inline group::FreeWord random_letters(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
    group::FreeWord w(rng() % (max_len + 1));
    for (auto& x : w) {
        int g = static_cast<int>(rng() % rank) + 1;
        x = rng() % 2 ? g : -g;
    }
    return w;
}

// Reduce by repeated left-to-right scans until nothing cancels.
inline group::FreeWord naive_reduce(group::FreeWord w) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == -w[i + 1]) {
                w.erase(w.begin() + i, w.begin() + i + 2);
                changed = true;
                break;
            }
        }
    }
    return w;
}

inline std::string render_word(const group::FreeWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (int x : w) {
        if (!s.empty()) s += ' ';
        s += (x > 0 ? "g" : "G") + std::to_string(x > 0 ? x : -x);
    }
    return s;
}

// Random element built through the literal parser, so free parts arrive
// reduced by the library itself.
inline group::Element random_element(const std::shared_ptr<const group::GroupSpec>& s, std::mt19937_64& rng) {
    std::vector<std::string> parts;
    for (const auto& f : s->factors) {
        if (auto* z = std::get_if<group::Zk>(&f)) {
            std::string t = "[";
            for (std::size_t i = 0; i < z->k; ++i) {
                if (i) t += ',';
                // occasionally huge, to exercise the arbitrary-precision path
                long long v = static_cast<long long>(rng() % 41) - 20;
                t += rng() % 50 == 0 ? std::to_string(v) + "000000000000000000000" : std::to_string(v);
            }
            parts.push_back(t + "]");
        } else if (auto* m = std::get_if<group::ZMod>(&f)) {
            parts.push_back(std::to_string(static_cast<long long>(rng() % (3 * m->m)) - m->m));
        } else {
            parts.push_back(render_word(random_letters(rng, std::get<group::Free>(f).rank, 12)));
        }
    }
    if (parts.size() == 1) return group::parse_element(s, parts[0]);
    std::string t = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) t += (i ? " ; " : " ") + parts[i];
    return group::parse_element(s, t + " )");
}

} // namespace nonreg::fixture
