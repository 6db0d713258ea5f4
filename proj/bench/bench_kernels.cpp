#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "composita/families.hpp"
#include "composita/kernels.hpp"
#include "composita/verify.hpp"

using namespace composita;

namespace {

// Coefficients with x-degree growing along the series, like (1+t)^x.
std::vector<XPoly> sample(std::size_t len, long seed) {
    std::vector<XPoly> out(len);
    for (std::size_t n = 0; n < len; ++n) {
        std::vector<Rational> c(n % 6 + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = Rational(static_cast<long>((seed * 31 + n * 7 + i * 13) % 19) - 9, static_cast<long>(i + 1));
        }
        out[n] = XPoly(std::move(c));
    }
    return out;
}

void BM_CauchySerial(benchmark::State& state) {
    const auto f = sample(static_cast<std::size_t>(state.range(0)), 1);
    const auto g = sample(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::cauchy_product_serial(f, g));
}

void BM_CauchyParallel(benchmark::State& state) {
    const auto f = sample(static_cast<std::size_t>(state.range(0)), 1);
    const auto g = sample(static_cast<std::size_t>(state.range(0)), 2);
    omp_set_num_threads(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::cauchy_product(f, g));
    state.counters["threads"] = static_cast<double>(state.range(1));
}

void BM_VerifyAll(benchmark::State& state) {
    std::vector<FamilySpec> specs;
    for (Family f : kAllFamilies) specs.push_back(default_family_spec(f));
    omp_set_num_threads(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_families(specs, 8));
    state.counters["threads"] = static_cast<double>(state.range(0));
}

}  // namespace

BENCHMARK(BM_CauchySerial)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CauchyParallel)
    ->ArgsProduct({{16, 64, 128}, {1, 2, 4}})
    ->Unit(benchmark::kMicrosecond)
    ->UseRealTime();
BENCHMARK(BM_VerifyAll)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
