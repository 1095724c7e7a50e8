#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "qdeform/symexpr/parse.hpp"
#include "qdeform/tensor/kernels.hpp"

using namespace qdeform;

namespace {

std::vector<RatFunc> block(std::size_t n, int salt) {
  std::vector<RatFunc> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    int a = static_cast<int>((i * 7 + salt) % 5) - 2;
    int b = static_cast<int>((i * 3 + salt) % 4) - 1;
    if ((i + salt) % 3 == 0) {
      out.push_back(RatFunc(0));
      continue;
    }
    out.push_back(parse_ratfunc("q^" + std::to_string(a) + " - r^" + std::to_string(b)));
  }
  return out;
}

void BM_MultiplySerial(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto a = block(n, 1), b = block(n, 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply_serial(a, b, n, n, n));
}

void BM_MultiplyParallel(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto a = block(n, 1), b = block(n, 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply_parallel(a, b, n, n, n));
}

RatFunc square(const RatFunc& x) { return x * x; }

void BM_MapSerial(benchmark::State& st) {
  auto x = block(static_cast<std::size_t>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::map_serial(x, square));
}

void BM_MapParallel(benchmark::State& st) {
  auto x = block(static_cast<std::size_t>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::map_parallel(x, square));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(4)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(4)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MapSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MapParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
