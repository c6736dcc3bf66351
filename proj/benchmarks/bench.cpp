#include <benchmark/benchmark.h>

#include <string>

#include "nonreg/dnreg.hpp"
#include "nonreg/efa.hpp"
#include "nonreg/fatl.hpp"
#include "nonreg/group.hpp"
#include "nonreg/pda.hpp"

using namespace nonreg;

namespace {

const char* const anbn_grammar = "start: S\nS -> a S b | a b\n";
const char* const anbn_pda =
    "mode: empty-stack\nstart: p\nstack-start: Z\nfinal:\n"
    "p a Z -> p A\np a A -> p AA\np b A -> q _\nq b A -> q _\n";

std::string anbn(std::size_t n) { return std::string(n, 'a') + std::string(n, 'b'); }

} // namespace

static void BM_WordDegree(benchmark::State& st) {
    auto g = dnreg::canonical_form(cfg::parse_grammar(anbn_grammar));
    auto w = anbn(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(dnreg::word_degree(g, w));
}
BENCHMARK(BM_WordDegree)->RangeMultiplier(2)->Range(4, 32);

static void BM_DnregProfile(benchmark::State& st) {
    auto g = dnreg::canonical_form(cfg::parse_grammar(anbn_grammar));
    for (auto _ : st) benchmark::DoNotOptimize(dnreg::profile(g, st.range(0)));
}
BENCHMARK(BM_DnregProfile)->DenseRange(8, 14, 2);

static void BM_PushWord(benchmark::State& st) {
    auto p = pda::parse_pda(anbn_pda);
    auto w = anbn(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(pda::push_word(p, w));
}
BENCHMARK(BM_PushWord)->RangeMultiplier(2)->Range(4, 64);

static void BM_GmcWordSqrt(benchmark::State& st) {
    auto a = efa::build_sqrt_efa();
    // b a b a^2 b ... : one block per step, then the c tail
    std::string w = "b";
    for (long i = 1; i <= st.range(0); ++i) w += std::string(i, 'a') + "b";
    w += std::string(st.range(0), 'c');
    for (auto _ : st) benchmark::DoNotOptimize(efa::gmc_word(a, w));
}
BENCHMARK(BM_GmcWordSqrt)->DenseRange(2, 6, 2);

static void BM_GmcProfile(benchmark::State& st) {
    auto a = efa::build_anbn_efa();
    for (auto _ : st) benchmark::DoNotOptimize(efa::gmc_profile(a, st.range(0)));
}
BENCHMARK(BM_GmcProfile)->DenseRange(8, 16, 4);

static void BM_EfaBoundedNfa(benchmark::State& st) {
    auto a = efa::build_anbn_efa();
    for (auto _ : st) benchmark::DoNotOptimize(efa::build_bounded_nfa(a, st.range(0)));
}
BENCHMARK(BM_EfaBoundedNfa)->DenseRange(0, 3);

static void BM_JcWord(benchmark::State& st) {
    auto m = fatl::build_paper_example();
    auto w = "a" + std::string(st.range(0), 'b') + "c";
    for (auto _ : st) benchmark::DoNotOptimize(fatl::jc_word(m, w));
}
BENCHMARK(BM_JcWord)->RangeMultiplier(2)->Range(4, 32);

static void BM_FatlBoundedNfa(benchmark::State& st) {
    auto m = fatl::build_paper_example();
    for (auto _ : st) benchmark::DoNotOptimize(fatl::build_bounded_nfa(m, st.range(0)));
}
BENCHMARK(BM_FatlBoundedNfa)->DenseRange(0, 3);

static void BM_FreeGroupMul(benchmark::State& st) {
    auto s = std::make_shared<const group::GroupSpec>(group::free_group(2));
    std::string t;
    for (long i = 0; i < st.range(0); ++i) t += (i % 3 ? "g1 " : "g2 ");
    auto a = group::parse_element(s, t);
    auto b = group::inv(a);
    for (auto _ : st) benchmark::DoNotOptimize(group::mul(a, b));
}
BENCHMARK(BM_FreeGroupMul)->RangeMultiplier(4)->Range(4, 256);
BENCHMARK_MAIN();
