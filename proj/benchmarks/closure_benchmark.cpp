#include <benchmark/benchmark.h>

#include <random>

#include "rcc8/composition_table.hpp"
#include "rcc8/network.hpp"

namespace {

using namespace rcc8;

void BM_AlgebraicClosure(benchmark::State& state) {
  CompositionTable table = load_composition_table_file(default_composition_table_path());
  const auto vars = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);

  std::vector<ConstraintNetwork> nets;
  for (int i = 0; i < 64; ++i) {
    ConstraintNetwork net;
    for (std::size_t v = 0; v < vars; ++v) net.variable("v" + std::to_string(v));
    for (std::size_t p = 0; p < vars; ++p) {
      for (std::size_t q = p + 1; q < vars; ++q) {
        auto bits = static_cast<std::uint8_t>(rng());
        if (bits == 0) bits = 0xFF;
        net.set_constraint(p, q, RelationSet::from_bits(bits));
      }
    }
    nets.push_back(std::move(net));
  }

  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(algebraic_closure(nets[i % nets.size()], table));
    ++i;
  }
}
BENCHMARK(BM_AlgebraicClosure)->Arg(4)->Arg(8)->Arg(12);

}  // namespace
