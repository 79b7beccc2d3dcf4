#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "cubrank/eisenstein.hpp"
#include "cubrank/fields.hpp"
#include "cubrank/harness.hpp"
#include "cubrank/norms.hpp"

namespace {

using namespace cubrank;

void BM_ConductorSieve(benchmark::State& state) {
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        ConductorTable table(bound);
        benchmark::DoNotOptimize(table.max_value());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bound));
}
BENCHMARK(BM_ConductorSieve)->Arg(100000)->Arg(1000000);

void BM_SymbolEval(benchmark::State& state) {
    EisensteinInt pi = factor_split_prime(999983 % 3 == 1 ? 999983 : 1000003);
    std::uint64_t x = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cubic_residue_symbol(EisensteinInt(BigInt(x), BigInt(1)), pi));
        x = x * 1103515245 % 999979 + 1;
    }
}
BENCHMARK(BM_SymbolEval);

void BM_FactorSplitPrime(benchmark::State& state) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t l = 100003; primes.size() < 64; l += 2) {
        if (l % 3 == 1 && is_prime_u64(l)) primes.push_back(l);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factor_split_prime(primes[i]));
        i = (i + 1) % primes.size();
    }
}
BENCHMARK(BM_FactorSplitPrime);

void BM_RankPerField(benchmark::State& state) {
    // all fields with conductor in a window chosen to mix r = 1..3
    std::vector<CyclicCubicField> fields;
    for (const Conductor& c : enumerate_conductors(20000)) {
        if (c.value < 10000) continue;
        for (CyclicCubicField& f : fields_for_conductor(c)) fields.push_back(std::move(f));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_im_phi(fields[i]));
        i = (i + 1) % fields.size();
    }
}
BENCHMARK(BM_RankPerField);

void BM_CharacterSumIdentity(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_character_sum_identity(91, k));
    }
}
BENCHMARK(BM_CharacterSumIdentity)->Arg(1)->Arg(2);

void BM_Scan(benchmark::State& state) {
    const auto bound = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        ScanConfig cfg;
        cfg.max_conductor = bound;
        cfg.k_max = 1;
        benchmark::DoNotOptimize(scan(cfg).report.field_count);
    }
}
BENCHMARK(BM_Scan)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
