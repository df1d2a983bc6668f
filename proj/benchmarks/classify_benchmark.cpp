#include <benchmark/benchmark.h>

#include <vector>

#include "rcc8/grid_region.hpp"

namespace {

using namespace rcc8;

std::vector<GridRegion> sample_regions(int count, bool one_piece) {
  Rng rng(1);
  std::vector<GridRegion> regions;
  regions.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) regions.push_back(random_region({6, 6}, one_piece, rng));
  return regions;
}

void BM_ClassifyRandomPairs(benchmark::State& state) {
  auto regions = sample_regions(512, false);
  std::size_t i = 0;
  for (auto _ : state) {
    const GridRegion& x = regions[i % regions.size()];
    const GridRegion& y = regions[(i * 7 + 3) % regions.size()];
    benchmark::DoNotOptimize(classify(x, y));
    ++i;
  }
}
BENCHMARK(BM_ClassifyRandomPairs);

void BM_RandomRegionOnePiece(benchmark::State& state) {
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(random_region({6, 6}, true, rng));
}
BENCHMARK(BM_RandomRegionOnePiece);

}  // namespace
