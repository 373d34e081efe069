#include "heisenrig/homspace.hpp"

#include <benchmark/benchmark.h>

using namespace heisenrig;

namespace {

HeisenbergGroup z4_group() {
    FiniteRing ring = FiniteRing::build("Z/4");
    return HeisenbergGroup(ring, 1, Pairing::identity(ring, 1),
                           *certify_frobenius(ring).generating);
}

void BM_CycloMul(benchmark::State& state) {
    CycloField field = CycloField::make(12);
    CycloNum a = field.root_of_unity(1) + field.root_of_unity(5);
    CycloNum b = field.root_of_unity(7) + field.one();
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul);

void BM_CycloInv(benchmark::State& state) {
    CycloField field = CycloField::make(12);
    CycloNum a = field.root_of_unity(1) + field.from_rational(make_rational(2));
    for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_CycloInv);

void BM_Rref(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    CycloField field = CycloField::make(4);
    CycloMatrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m.set(r, c, field.root_of_unity(static_cast<std::int64_t>((r * c + r + 1) % 4)));
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(8)->Arg(16);

void BM_PiMatrix(benchmark::State& state) {
    HeisenbergGroup group = z4_group();
    GroupElement g = group.element_of_index(27);
    for (auto _ : state) benchmark::DoNotOptimize(pi_matrix(group, g));
}
BENCHMARK(BM_PiMatrix);

void BM_GroupEnumeration(benchmark::State& state) {
    HeisenbergGroup group = z4_group();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(group));
}
BENCHMARK(BM_GroupEnumeration);

void BM_HomSolve(benchmark::State& state) {
    HeisenbergGroup group = z4_group();
    Representation pi = schrodinger_representation(group);
    Representation ind = induced_representation(group);
    for (auto _ : state) benchmark::DoNotOptimize(hom_space(pi, ind));
}
BENCHMARK(BM_HomSolve);

void BM_SvnPipeline(benchmark::State& state) {
    FiniteRing ring = FiniteRing::build("Z/4");
    for (auto _ : state) benchmark::DoNotOptimize(stone_von_neumann_verify(ring));
}
BENCHMARK(BM_SvnPipeline);

}  // namespace

BENCHMARK_MAIN();
