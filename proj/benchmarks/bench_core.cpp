#include <benchmark/benchmark.h>

#include <cmath>

#include "mmeslab/locc.hpp"
#include "mmeslab/measures.hpp"
#include "mmeslab/mmes.hpp"
#include "mmeslab/qmat.hpp"
#include "mmeslab/teleport.hpp"

using namespace mmeslab;

namespace {

Matrix random_hermitian(int n, Rng& rng) {
    std::normal_distribution<double> gauss;
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    return 0.5 * (g + g.adjoint());
}

void BM_HermitianEig(benchmark::State& state) {
    Rng rng(1);
    const Matrix h = random_hermitian(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->Arg(8)->Arg(16)->Arg(32);

void BM_IsMmes(benchmark::State& state) {
    Rng rng(2);
    const int d = static_cast<int>(state.range(0));
    const DensityMatrix rho = construct_mmes(random_mmes_spec(d, 2, 2 * d, rng));
    for (auto _ : state) benchmark::DoNotOptimize(is_mmes(rho, Subsystem::A, 1e-8));
}
BENCHMARK(BM_IsMmes)->Arg(2)->Arg(3);

void BM_TeleportSweep(benchmark::State& state) {
    Rng rng(3);
    const int d = static_cast<int>(state.range(0));
    const Vector psi = haar_random_ket(d, rng);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_mmes_teleport(psi));
}
BENCHMARK(BM_TeleportSweep)->Arg(2)->Arg(3);

void BM_FullyEntangledFraction(benchmark::State& state) {
    const BipartiteShape shape{2, 2};
    Vector phi = Vector::Zero(4);
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    const Matrix m = 0.6 * (phi * phi.adjoint()).eval() + 0.4 * 0.25 * Matrix::Identity(4, 4);
    const DensityMatrix rho = make_density_matrix(shape, m);
    Rng rng(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(fully_entangled_fraction(rho, {.restarts = 4}, rng));
}
BENCHMARK(BM_FullyEntangledFraction);

void BM_DiscriminateTriple(benchmark::State& state) {
    const std::vector<WeylIndex> candidates{{0, 0, 5}, {1, 2, 5}, {3, 1, 5}};
    for (auto _ : state) benchmark::DoNotOptimize(discriminate(candidates, 5));
}
BENCHMARK(BM_DiscriminateTriple);

}  // namespace

BENCHMARK_MAIN();
