#include <benchmark/benchmark.h>

#include "bergman/carleson.hpp"
#include "bergman/kernels.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/radial_ops.hpp"
#include "bergman/spaces.hpp"

namespace {

using namespace bergman;

TaylorPolynomial dense_polynomial(int n, int degree) {
    Rng rng(2024);
    TaylorPolynomial f(n, degree);
    for (int k = 0; k <= degree; ++k) {
        for (const MultiIndex& m : homogeneous_indices(n, k)) {
            f.set_coefficient(m, Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
        }
    }
    return f;
}

void BM_MultiplyTruncated(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    const TaylorPolynomial f = dense_polynomial(2, degree);
    const TaylorPolynomial g = dense_polynomial(2, degree);
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiply_truncated(f, g, degree));
    }
}
BENCHMARK(BM_MultiplyTruncated)->Arg(8)->Arg(16)->Arg(24);

void BM_PowerKernelSeries(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    const BallPoint w{Complex(0.3, 0.2), Complex(-0.1, 0.4)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(power_kernel_series(3.5, w, degree));
    }
}
BENCHMARK(BM_PowerKernelSeries)->Arg(20)->Arg(40)->Arg(60);

void BM_KernelSeriesReproduce(benchmark::State& state) {
    const KernelSpec spec = KernelSpec::with_default_q(2, -3.5);
    const TaylorPolynomial f = dense_polynomial(2, 6);
    const BallPoint w{Complex(0.2, 0.1), Complex(0.3, -0.2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(reproduce_check(f, spec, w, 40));
    }
}
BENCHMARK(BM_KernelSeriesReproduce);

void BM_FracCoeff(benchmark::State& state) {
    const FracOpParams params{2, 1.3, -0.7};
    int k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(frac_coeff(params, 1 + (k++ % 200)));
    }
}
BENCHMARK(BM_FracCoeff);

void BM_ForelliRudin(benchmark::State& state) {
    const double rho = 1.0 - std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(forelli_rudin(1, rho, 0.0, 1.0, 1e-10));
    }
}
BENCHMARK(BM_ForelliRudin)->Arg(1)->Arg(2)->Arg(3);

void BM_BergmanNormMonteCarlo(benchmark::State& state) {
    const TaylorPolynomial f = dense_polynomial(2, 6);
    const SpaceParams sp{2, 1.5, 0.5};
    QuadratureSpec quad;
    quad.mc_samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bergman_norm(f, sp, quad, NormMethod::monte_carlo));
    }
}
BENCHMARK(BM_BergmanNormMonteCarlo)->Arg(10000)->Arg(100000);

} // namespace

BENCHMARK_MAIN();
