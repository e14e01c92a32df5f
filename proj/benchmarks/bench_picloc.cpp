#include <benchmark/benchmark.h>

#include <random>

#include "picloc/cech.hpp"
#include "picloc/picard.hpp"

using namespace picloc;

namespace {

const std::string data_dir = PICLOC_DATA_DIR;

IntMatrix random_matrix(std::size_t n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-20, 20);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = entry(rng);
    return m;
}

// The boundary of the n-simplex: every proper subset of {0..n} is a face.
SimplicialComplex simplex_boundary(std::size_t n)
{
    std::vector<Face> facets;
    for (std::size_t skip = 0; skip <= n; ++skip)
    {
        Face f;
        for (std::size_t v = 0; v <= n; ++v)
            if (v != skip)
                f.push_back(v);
        facets.push_back(f);
    }
    return SimplicialComplex::from_index_facets(n + 1, facets);
}

void smith_form(benchmark::State& state)
{
    const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(smith_form)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void simplicial_direct(benchmark::State& state)
{
    const auto k = simplex_boundary(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(picloc_simplicial_direct(k));
}
BENCHMARK(simplicial_direct)->DenseRange(2, 6);

void simplicial_formula(benchmark::State& state)
{
    const auto k = simplex_boundary(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(picloc_simplicial_formula(k));
}
BENCHMARK(simplicial_formula)->DenseRange(2, 6);

void integral_binoid(benchmark::State& state)
{
    const auto p = parse_binoid_text("generators: x y z w\nx + y = z + w\n");
    for (auto _ : state)
        benchmark::DoNotOptimize(picloc_integral_binoid(p));
}
BENCHMARK(integral_binoid);

void rp2_with_field(benchmark::State& state)
{
    const auto k = read_facet_file(data_dir + "/rp2.facets");
    for (auto _ : state)
        benchmark::DoNotOptimize(stanley_reisner_cohomology(k, FieldModel::symbolic()));
}
BENCHMARK(rp2_with_field);

}   // namespace

BENCHMARK_MAIN();
