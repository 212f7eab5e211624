#include <polylie/coalgebra/coproduct.hpp>
#include <polylie/coalgebra/verify.hpp>
#include <polylie/homology/bloch.hpp>
#include <polylie/numerics/polylog.hpp>
#include <polylie/symbolic/parse.hpp>

#include <benchmark/benchmark.h>

using namespace polylie;

namespace {

symbolic::Symbol formal(int depth, int weight) {
  std::vector<symbolic::Argument> args;
  for (int i = 1; i <= depth; ++i) args.push_back(symbolic::Argument::atom("x" + std::to_string(i)));
  std::vector<int> index(static_cast<std::size_t>(depth), 1);
  index.back() = weight - depth + 1;
  return symbolic::Symbol(args, index);
}

void BM_Delta(benchmark::State& state) {
  auto s = formal(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(coalgebra::delta(s));
}
BENCHMARK(BM_Delta)->Args({1, 6})->Args({2, 6})->Args({3, 6})->Args({4, 8});

void BM_DeltaSquaredSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coalgebra::verify_delta_squared(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DeltaSquaredSuite)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Coproduct(benchmark::State& state) {
  auto s = formal(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(coalgebra::coproduct(s));
}
BENCHMARK(BM_Coproduct)->Args({1, 4})->Args({2, 4})->Args({3, 5});

void BM_H1Order(benchmark::State& state) {
  int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homology::h1_order(q));
}
BENCHMARK(BM_H1Order)->Arg(13)->Arg(23)->Arg(31)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Polylog(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  numerics::Complex z = std::polar(0.3 * static_cast<double>(state.range(1)), 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(numerics::polylog(n, z));
}
BENCHMARK(BM_Polylog)->Args({2, 1})->Args({2, 3})->Args({4, 1})->Args({4, 3})->Args({4, 8});

void BM_SingleValued(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  numerics::Complex z = std::polar(0.8, 2.1);
  for (auto _ : state) benchmark::DoNotOptimize(numerics::single_valued_L(n, z));
}
BENCHMARK(BM_SingleValued)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
