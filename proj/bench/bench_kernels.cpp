#include <benchmark/benchmark.h>

#include <random>

#include "cdyn/block_ops.hpp"
#include "cdyn/crossed_product.hpp"
#include "cdyn/fixtures.hpp"
#include "cdyn/labs.hpp"
#include "cdyn/rc_diagnostics.hpp"

using namespace cdyn;

namespace {

// Z_n acting on M_d by random characters, d = 4.
DynSystem bench_system(std::size_t order) {
  RandomSystemOptions opts;
  opts.max_order = order;
  opts.min_dim = 4;
  opts.max_dim = 4;
  for (std::uint64_t seed = 1;; ++seed) {
    DynSystem sys = random_system(seed, opts);
    if (sys.order() == order) return sys;
  }
}

template <class F>
void rc_bench(benchmark::State& state, F kernel) {
  const DynSystem sys = bench_system(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(7);
  const Mat p = sys.random_element(rng), q = sys.random_element(rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(sys, p, q));
}

template <class F>
void v_bench(benchmark::State& state, F kernel) {
  const DynSystem sys = bench_system(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(7);
  const Eigen::Index n = static_cast<Eigen::Index>(sys.order()) * sys.dim();
  const BigOp t(sys, random_matrix(n, n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(kernel(sys, t));
}

template <class F>
void dichotomy_bench(benchmark::State& state, F kernel) {
  const labs::ShiftWindow w{static_cast<int>(state.range(0))};
  const labs::CircleFunction phi = labs::smooth_phi(), psi = labs::smooth_psi();
  for (auto _ : state) benchmark::DoNotOptimize(kernel(phi, psi, w, 16, 16));
}

}  // namespace

static void BM_RcModulus(benchmark::State& s) { rc_bench(s, rc_modulus); }
static void BM_RcModulusSerial(benchmark::State& s) { rc_bench(s, rc_modulus_serial); }
BENCHMARK(BM_RcModulus)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RcModulusSerial)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_VContinuity(benchmark::State& s) { v_bench(s, v_continuity_modulus); }
static void BM_VContinuitySerial(benchmark::State& s) { v_bench(s, v_continuity_modulus_serial); }
BENCHMARK(BM_VContinuity)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VContinuitySerial)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Dichotomy(benchmark::State& s) { dichotomy_bench(s, labs::rc_dichotomy); }
static void BM_DichotomySerial(benchmark::State& s) { dichotomy_bench(s, labs::rc_dichotomy_serial); }
BENCHMARK(BM_Dichotomy)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DichotomySerial)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
