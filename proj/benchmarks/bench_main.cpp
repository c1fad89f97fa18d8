#include <benchmark/benchmark.h>

#include "vknot/cobordism.hpp"
#include "vknot/families.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/random.hpp"
#include "vknot/satellite.hpp"

using namespace vknot;

namespace {

GaussDiagram sized_diagram(std::size_t chords) {
    Rng rng(42);
    GaussDiagram d;
    do {
        d = random_diagram(rng, chords);
    } while (d.chord_count() != chords);
    return d;
}

void bench_ht_polynomial(benchmark::State& state) {
    const GaussDiagram d =
        sized_diagram(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ht_polynomial(d));
}
BENCHMARK(bench_ht_polynomial)->Arg(8)->Arg(32)->Arg(128);

void bench_canonical_form(benchmark::State& state) {
    const GaussDiagram d =
        sized_diagram(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(bench_canonical_form)->Arg(8)->Arg(32)->Arg(128);

void bench_random_walk(benchmark::State& state) {
    const GaussDiagram d = sized_diagram(6);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            random_walk(d, static_cast<std::size_t>(state.range(0)), 7, 12));
}
BENCHMARK(bench_random_walk)->Arg(50)->Arg(200);

void bench_cable(benchmark::State& state) {
    const GaussDiagram d = sized_diagram(static_cast<std::size_t>(state.range(0)));
    const Pattern pat = parse_pattern("p=2 eps=++ tangle=1+");
    for (auto _ : state)
        benchmark::DoNotOptimize(cable(d, pat));
}
BENCHMARK(bench_cable)->Arg(4)->Arg(16)->Arg(64);

void bench_check_certificate(benchmark::State& state) {
    Rng rng(11);
    const GaussDiagram start = sized_diagram(5);
    const CobordismCertificate cert = random_concordance_certificate(
        rng, start, static_cast<int>(state.range(0)), 16);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_certificate(cert));
}
BENCHMARK(bench_check_certificate)->Arg(8)->Arg(32);

void bench_family_generator(benchmark::State& state) {
    const FamilySpec spec{2, {{3, 4}, {4, 3}}, static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(family_generator(spec));
}
BENCHMARK(bench_family_generator)->Arg(1)->Arg(8);

} // namespace

BENCHMARK_MAIN();
