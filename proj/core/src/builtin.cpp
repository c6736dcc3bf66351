#include "nonreg/builtin.hpp"

#include <array>

namespace nonreg {

namespace {

struct Example {
    std::string_view name;
    std::string_view kind;
    std::string_view text;
};

constexpr std::string_view anbn_cfg = "start: S\nS -> a S b | a b\n";

constexpr std::string_view anbn_pda = R"(mode: empty-stack
start: q
stack-start: Z
final:
q a Z -> q AZ
q a A -> q AA
q b A -> p _
p b A -> p _
p _ Z -> p _
)";

constexpr std::string_view anbn_efa = R"(group: Z^1
start: q0
final: q1
q0 a q0 [1]
q0 b q1 [-1]
q1 b q1 [-1]
)";

constexpr std::string_view sqrt_efa = R"(group: Z^1 x Zmod 2
start: s
final: k f
s b p ( [1] ; 0 )
p b p ( [1] ; 0 )
p a pa ( [0] ; 0 )
pa a pa ( [0] ; 0 )
pa b p ( [1] ; 0 )
p b r ( [0] ; 0 )
p a w ( [-1] ; 0 )
w a w ( [-1] ; 0 )
w b r ( [0] ; 0 )
w a x ( [0] ; 1 )
x a x ( [0] ; 0 )
x b r2 ( [0] ; 0 )
r b r ( [0] ; 0 )
r a ra ( [0] ; 0 )
ra a ra ( [0] ; 0 )
ra b r ( [0] ; 0 )
r c k ( [-1] ; 0 )
k c k ( [-1] ; 0 )
r2 b r2 ( [0] ; 0 )
r2 a r2a ( [0] ; 0 )
r2a a r2a ( [0] ; 0 )
r2a b r2 ( [0] ; 0 )
r2 c f ( [0] ; 1 )
)";

constexpr std::string_view translucent_fatl = R"(start: q0
final: q3
q0 b q1
q1 b q1
q1 c q2
q2 a q3
)";

constexpr std::string_view equal_ab_fatl = R"(start: p
final: p
p a q
q b p
)";

constexpr std::array<Example, 6> examples{{
    {"anbn-cfg", "cfg", anbn_cfg},
    {"anbn-pda", "pda", anbn_pda},
    {"anbn-efa", "efa", anbn_efa},
    {"sqrt-efa", "efa", sqrt_efa},
    {"paper-fatl", "fatl", translucent_fatl},
    {"equal-ab-fatl", "fatl", equal_ab_fatl},
}};

const Example* find(std::string_view name) {
    for (const auto& e : examples) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

} // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : examples) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

std::optional<std::string_view> builtin_example(std::string_view name) {
    if (const auto* e = find(name)) return e->text;
    return std::nullopt;
}

std::optional<std::string_view> builtin_kind(std::string_view name) {
    if (const auto* e = find(name)) return e->kind;
    return std::nullopt;
}

} // namespace nonreg
