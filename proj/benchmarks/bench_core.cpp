#include <benchmark/benchmark.h>

#include <vector>

#include "unicrit/classes.hpp"
#include "unicrit/fejer.hpp"
#include "unicrit/poly.hpp"
#include "unicrit/rng.hpp"
#include "unicrit/roots.hpp"
#include "unicrit/theorem.hpp"
#include "unicrit/trig.hpp"

namespace {

using namespace unicrit;

// Random polynomial with all roots on the unit circle, the workload
// critical-point extraction feeds the solver.
ComplexPoly unit_circle_poly(std::uint64_t seed, int degree) {
    SplitMix64 rng(seed);
    std::vector<Complex> roots(static_cast<std::size_t>(degree));
    for (Complex& r : roots) r = rng.next_unimodular();
    return ComplexPoly::from_roots(rng.next_unimodular(), roots);
}

TrigPoly random_nonneg_trig(std::uint64_t seed, int degree) {
    SplitMix64 rng(seed);
    std::vector<Complex> g(static_cast<std::size_t>(degree) + 1);
    for (Complex& gk : g) gk = rng.next_complex(1.0);
    while (std::abs(g.front()) < 0.05) g.front() = rng.next_complex(1.0);
    while (std::abs(g.back()) < 0.05) g.back() = rng.next_complex(1.0);
    return autocorrelate(SpectralFactor{std::move(g)});
}

void BM_FindRoots(benchmark::State& state) {
    const ComplexPoly p = unit_circle_poly(7, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_roots(p));
}
BENCHMARK(BM_FindRoots)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_SpectralFactorize(benchmark::State& state) {
    const TrigPoly t = random_nonneg_trig(11, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spectral_factorize(t));
}
BENCHMARK(BM_SpectralFactorize)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_MinOnCircle(benchmark::State& state) {
    const TrigPoly t = random_nonneg_trig(13, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(min_on_circle(t));
}
BENCHMARK(BM_MinOnCircle)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_CheckStarlike(benchmark::State& state) {
    const NormalizedPoly p = canonical_polynomial(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_starlike(p));
}
BENCHMARK(BM_CheckStarlike)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
