#include <benchmark/benchmark.h>

#include <vector>

#include "tenspect/char_ideal.hpp"
#include "tenspect/groebner.hpp"
#include "tenspect/products.hpp"
#include "tenspect/rng.hpp"
#include "tenspect/special.hpp"
#include "tenspect/spectral.hpp"
#include "tenspect/tucker.hpp"

using namespace tenspect;

namespace {

DenseTensor random_cubic(int side, std::uint64_t seed) {
  Rng rng(seed);
  DenseTensor t{Shape{side, side, side}};
  for (auto& v : t.flat()) v = rng.uniform(-1.0, 1.0);
  return t;
}

void bm_order_conjugate(benchmark::State& state) {
  Rng rng(1);
  const Complex z{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(order_conjugate(z, 3, 1));
  }
}
BENCHMARK(bm_order_conjugate);

void bm_ternary_product(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const DenseTensor a = random_cubic(side, 2);
  const DenseTensor b = random_cubic(side, 3);
  const DenseTensor c = random_cubic(side, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ternary_product(a, b, c));
  }
}
BENCHMARK(bm_ternary_product)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void bm_nary_product_order4(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  Rng rng(5);
  std::vector<DenseTensor> ops;
  for (int t = 0; t < 4; ++t) {
    DenseTensor op{Shape{side, side, side, side}};
    for (auto& v : op.flat()) v = rng.uniform(-1.0, 1.0);
    ops.push_back(std::move(op));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(nary_product(ops));
  }
}
BENCHMARK(bm_nary_product_order4)->Arg(2)->Arg(4);

void bm_adjoint(benchmark::State& state) {
  const DenseTensor a = random_cubic(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(adjoint_k(a, 1));
  }
}
BENCHMARK(bm_adjoint)->Arg(4)->Arg(16);

void bm_solve_spectral3_planted(benchmark::State& state) {
  const PlantedInstance inst = plant_spectral3(2, 7);
  SolveConfig cfg;
  cfg.seed = 1;
  cfg.restarts = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_spectral3(inst.a, cfg));
  }
}
BENCHMARK(bm_solve_spectral3_planted)->Unit(benchmark::kMillisecond);

void bm_matrix_charpoly(benchmark::State& state) {
  RationalMatrix a(2);
  a.at(1, 1) = 2;
  a.at(2, 2) = 2;
  a.at(1, 2) = a.at(2, 1) = 1;
  const CharIdeal ideal = matrix_char_ideal(a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(ideal.generators));
  }
}
BENCHMARK(bm_matrix_charpoly)->Unit(benchmark::kMillisecond);

void bm_tucker_roundtrip(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const DenseTensor d = random_cubic(side, 8);
  const TuckerTriple t{random_orthonormal(side, 9),
                       random_orthonormal(side, 10),
                       random_orthonormal(side, 11)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tucker_reconstruct(tucker_core(d, t), t));
  }
}
BENCHMARK(bm_tucker_roundtrip)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
