#include <benchmark/benchmark.h>

#include <string>

#include "rcc8/answer_parsing.hpp"

namespace {

using namespace rcc8;

const std::string kResponse =
    "If DC(x,y) and DC(y,z), then x and z can either be disconnected (DC) or "
    "externally connected (EC). However, the other relations like part-of "
    "(TPP, NTPP) and their inverses (TPPi, NTPPi), partial overlap (PO), and "
    "equality (EQ) are not possible. So, the possible relationships between x and "
    "z are:\nDC(x,z): x and z are disconnected.\nEC(x,z): x and z are externally "
    "connected.";

void BM_ParseRelationSet(benchmark::State& state) {
  Lexicon lex = Lexicon::canonical();
  for (auto _ : state) benchmark::DoNotOptimize(parse_relation_set(kResponse, lex));
}
BENCHMARK(BM_ParseRelationSet);

void BM_ParsePreferred(benchmark::State& state) {
  Lexicon lex = Lexicon::canonical();
  const std::string response =
      "Without additional context, it's safer to assume that x and z touch at the "
      "boundary (EC).";
  for (auto _ : state) benchmark::DoNotOptimize(parse_preferred(response, lex));
}
BENCHMARK(BM_ParsePreferred);

}  // namespace
