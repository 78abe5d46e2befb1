#include <benchmark/benchmark.h>

#include "hypchroma/bounds.hpp"
#include "hypchroma/certify.hpp"
#include "hypchroma/coloring.hpp"
#include "hypchroma/kernel.hpp"
#include "hypchroma/net.hpp"
#include "hypchroma/rotation.hpp"

using namespace hypchroma;

static void BM_Distance(benchmark::State& state) {
  UniformSource rng(1);
  std::vector<HPoint> pts;
  for (int i = 0; i < 1024; ++i) pts.push_back(uniform_in_disk(rng, 8.0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist(pts[i & 1023], pts[(i * 7 + 3) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_Distance);

static void BM_BuildNet(benchmark::State& state) {
  const double radius = static_cast<double>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(build_net(radius, 0.4, seed++).centers.size());
}
BENCHMARK(BM_BuildNet)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ColorNetGraph(benchmark::State& state) {
  const Net net = build_net(6.0, 0.4, 1);
  const DistanceGraph g = build_distance_graph(net, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_color(g).count);
  state.counters["vertices"] = g.size();
}
BENCHMARK(BM_ColorNetGraph)->Unit(benchmark::kMillisecond);

static void BM_Validate(benchmark::State& state) {
  const Net net = build_net(5.0, 0.4, 1);
  const Coloring c = greedy_color(build_distance_graph(net, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(validate_coloring(net, c, 1.0, 10000, 3).violations);
}
BENCHMARK(BM_Validate)->Unit(benchmark::kMillisecond);

static void BM_RotationSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_triangular_embedding(n, 1, 10000000).nodes);
}
BENCHMARK(BM_RotationSearch)->Arg(7)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_CertifyIdeal(benchmark::State& state) {
  const GluedSurface s = build_ideal_surface(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_clique(s, 4).margin);
}
BENCHMARK(BM_CertifyIdeal)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_GenusScan(benchmark::State& state) {
  for (auto _ : state) {
    std::int64_t sum = 0;
    for (std::int64_t g = 28; g < 100000; ++g) sum += bounds::genus_lower_choice(g).clique;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_GenusScan)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
