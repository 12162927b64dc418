// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "dval/algorithms/algorithms.hpp"
#include "dval/field/jacobian.hpp"
#include "dval/io/document.hpp"

using namespace dval;

namespace {

std::vector<FieldElem> jacobian_input(std::size_t count)
{
    FieldPresentation f({"T2", "T3", "T4", "T5", "T6"});
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-9, 9), e(0, 3), s(0, 4);
    std::vector<FieldElem> out;
    for (std::size_t k = 0; k < count; ++k) {
        std::string text;
        for (int t = 0; t < 4; ++t) {
            int v = c(rng);
            text += (v < 0 ? " - " : " + ") + std::to_string(v == 0 ? 1 : std::abs(v));
            text += "*T" + std::to_string(2 + s(rng)) + "^" + std::to_string(e(rng));
            text += "*T" + std::to_string(2 + s(rng)) + "^" + std::to_string(e(rng));
        }
        out.push_back(parse_field_element(text, f));
    }
    // A dependent last element forces the symbolic elimination.
    out.back() = out[0] * out[1];
    return out;
}

Embedding order_input()
{
    return load_document(std::string(DVAL_DATA_DIR) + "/identity4.json").embedding;
}

void BM_JacobianRank(benchmark::State& state)
{
    auto elems = jacobian_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(jacobian_rank(elems, 5));
}

void BM_JacobianRankReference(benchmark::State& state)
{
    auto elems = jacobian_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(jacobian_rank_reference(elems, 5));
}

void BM_OrderCheck(benchmark::State& state)
{
    Embedding e = order_input();
    for (auto _ : state) benchmark::DoNotOptimize(order_function_check(e, 5, static_cast<int>(state.range(0)), 1));
}

void BM_OrderCheckReference(benchmark::State& state)
{
    Embedding e = order_input();
    for (auto _ : state)
        benchmark::DoNotOptimize(order_function_check_reference(e, 5, static_cast<int>(state.range(0)), 1));
}

} // namespace

BENCHMARK(BM_JacobianRank)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobianRankReference)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrderCheck)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrderCheckReference)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
