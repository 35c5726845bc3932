#include <benchmark/benchmark.h>

#include <random>

#include "minkring/identities.hpp"
#include "minkring/products.hpp"
#include "minkring/rewriting.hpp"

namespace {

using namespace minkring;

void BM_PhiZnTiling(benchmark::State& state) {
  Presentation p = coxeter_ring();
  LaurentPoly f = zn_tiling(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phi_map(p, f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PhiZnTiling)->DenseRange(1, 8)->Complexity();

void BM_KernelMemberZn(benchmark::State& state) {
  Presentation p = coxeter_ring();
  int n = static_cast<int>(state.range(0));
  LaurentPoly f = LaurentPoly::var("z", n) - zn_tiling(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_member(p, f));
}
BENCHMARK(BM_KernelMemberZn)->DenseRange(1, 8);

void BM_MultiplyTriangles(benchmark::State& state) {
  Int n = state.range(0);
  SimpleFunction a = indicator(GridSet::triangle(n));
  SimpleFunction b = indicator(GridSet::down_triangle(n), IndicatorMode::RelativeInterior);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_MultiplyTriangles)->RangeMultiplier(2)->Range(1, 8);

void BM_MultiplyBoxes(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  std::vector<AxisRange> axes(static_cast<std::size_t>(d), AxisRange{0, 2});
  SimpleFunction a = indicator(Polytope::box(axes));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, a));
}
BENCHMARK(BM_MultiplyBoxes)->DenseRange(1, 4);

void BM_SecondNormalForm(benchmark::State& state) {
  GridSet g(0, state.range(0), 0, state.range(0), 1, state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(second_normal_form(g));
}
BENCHMARK(BM_SecondNormalForm)->DenseRange(1, 6);

void BM_RandomIdealMember(benchmark::State& state) {
  Presentation p = coxeter_ring();
  std::mt19937_64 rng(1);
  std::vector<LaurentPoly> fs;
  for (int i = 0; i < 32; ++i) fs.push_back(random_ideal_element(p, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(kernel_member(p, fs[i++ % fs.size()]));
}
BENCHMARK(BM_RandomIdealMember);

void BM_MinimalAntichainsSquare(benchmark::State& state) {
  Polytope sq = Polytope::box({{0, 1}, {0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(minimal_antichains(sq));
}
BENCHMARK(BM_MinimalAntichainsSquare);

void BM_TensorIdentity(benchmark::State& state) {
  ProductPresentation pp = product_presentation(box_ring(1, true), coxeter_ring());
  int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_tensor_identity(pp, bound));
}
BENCHMARK(BM_TensorIdentity)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
