#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "diagramalg/characters.hpp"
#include "diagramalg/coeff.hpp"
#include "diagramalg/diagrams.hpp"
#include "diagramalg/irreps.hpp"
#include "diagramalg/symrep.hpp"

using namespace diagramalg;

namespace {

// Random partition-algebra diagrams built as words in the generators.
std::vector<Diagram> random_diagrams(int k, int count) {
    std::mt19937_64 rng(7);
    auto gens = family_generators(Family::Partition, k);
    std::vector<Diagram> out;
    for (int c = 0; c < count; ++c) {
        Diagram d = identity(k);
        for (int step = 0; step < 3 * k; ++step) d = concat(d, gens[rng() % gens.size()]).product;
        out.push_back(d);
    }
    return out;
}

void BM_Concat(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    auto ds = random_diagrams(k, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(concat(ds[i % 64], ds[(i + 1) % 64]));
        ++i;
    }
}
BENCHMARK(BM_Concat)->Arg(4)->Arg(12)->Arg(48);

void BM_Multiply(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    auto ds = random_diagrams(k, 16);
    Element a(k, Family::Partition), b(k, Family::Partition);
    for (int j = 0; j < 8; ++j) {
        a = a + Element(ds[j], Family::Partition, LaurentPoly(j + 1));
        b = b + Element(ds[8 + j], Family::Partition, LaurentPoly(1 - j));
    }
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(12);

void BM_SpechtMatrix(benchmark::State& state) {
    const IntPartition shape{4, 3, 2};
    const auto sigma = cycle_permutation(IntPartition{9});
    for (auto _ : state) benchmark::DoNotOptimize(rep_matrix(sigma, shape));
}
BENCHMARK(BM_SpechtMatrix);

void BM_IrrepMatrix(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto basis = state.range(1) == 0 ? BasisChoice::Twisted : BasisChoice::Tableau;
    IrreducibleModule mod(Family::Partition, k, IntPartition{1}, basis);
    auto ds = random_diagrams(k, 16);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(mod.matrix(ds[i++ % 16]));
    state.counters["dim"] = mod.dimension();
}
BENCHMARK(BM_IrrepMatrix)->Args({3, 0})->Args({3, 1})->Args({4, 0})->Args({4, 1});

void BM_CharacterTable(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(character_table(Family::Partition, k));
}
BENCHMARK(BM_CharacterTable)->Arg(4)->Arg(6)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
