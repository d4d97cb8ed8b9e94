#include <benchmark/benchmark.h>

#include "../tests/fixtures.hpp"

using namespace qgr;
using namespace fixtures;

static void BM_euler_tree(benchmark::State& state) {
  Winding f = hall_string();
  for (auto _ : state) {
    Int v = euler_tree(f, {1, 1, 2});
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_euler_tree);

static void BM_band_formula_sweep(benchmark::State& state) {
  std::vector<int> eps = {-1, -1, +1, -1, +1};
  for (auto _ : state) {
    Int total = 0;
    std::vector<long long> t(5, 0);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == 5) {
        total += band_formula({eps, t, 3});
        return;
      }
      for (t[i] = 0; t[i] <= 3; ++t[i]) self(self, i + 1);
      t[i] = 0;
    };
    rec(rec, 0);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_band_formula_sweep);

static void BM_band_recursion(benchmark::State& state) {
  BandProfile p{{-1, -1, +1, -1, +1}, {1, 2, 3, 2, 1}, 3};
  for (auto _ : state) {
    Int v = band_recursion_oracle(p);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_band_recursion);

static void BM_kronecker_hall(benchmark::State& state) {
  Quiver k = kronecker();
  Winding id = identity_winding(k);
  HallFunction f = HallFunction::make(k, {simple_at(k, "2"), kron_p1()}, {});
  HallFunction g = HallFunction::make(k, {simple_at(k, "1"), kron_i2()}, {});
  ModuleExpr m = module_of(k, {BandTerm{id, 4, "L"}});
  for (auto _ : state) {
    Int v = product_evaluate(f, g, m);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_kronecker_hall);

static void BM_fixed_point_count(benchmark::State& state) {
  Winding f = star_tail_tree();
  for (auto _ : state) {
    Int v = fixed_point_count(f, 1, {1, 1, 2});
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_fixed_point_count);

BENCHMARK_MAIN();
