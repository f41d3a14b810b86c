// Serial reference versus parallel frontier expansion for ball enumeration.
#include <benchmark/benchmark.h>

#include "growthlab/ball.hpp"
#include "growthlab/catalog.hpp"

using namespace growthlab;

namespace {

struct Fixture {
  GroupPtr group;
  GeneratingSet gens;
};

Fixture load(const std::string& name) {
  const auto e = catalog_entry(name);
  auto g = make_group(e.spec);
  return {g, catalog_generators(e, *g)};
}

void BM_BallParallel(benchmark::State& state, const std::string& name) {
  const auto f = load(name);
  const int radius = static_cast<int>(state.range(0));
  std::size_t size = 0;
  for (auto _ : state) {
    const auto b = grow_ball(*f.group, {f.group->identity()}, f.gens.elements, radius);
    size = b.elements.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["elements"] = static_cast<double>(size);
}

void BM_BallSerial(benchmark::State& state, const std::string& name) {
  const auto f = load(name);
  const int radius = static_cast<int>(state.range(0));
  std::size_t size = 0;
  for (auto _ : state) {
    const auto b = grow_ball_serial(*f.group, {f.group->identity()}, f.gens.elements, radius);
    size = b.elements.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["elements"] = static_cast<double>(size);
}

}  // namespace

BENCHMARK_CAPTURE(BM_BallParallel, heisenberg, std::string("heisenberg"))->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BallSerial, heisenberg, std::string("heisenberg"))->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BallParallel, free23, std::string("free:2,3"))->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BallSerial, free23, std::string("free:2,3"))->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BallParallel, prod, std::string("prod:4,16,64"))->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BallSerial, prod, std::string("prod:4,16,64"))->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
