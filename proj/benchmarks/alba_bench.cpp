#include <benchmark/benchmark.h>

#include "alba/engine.hpp"
#include "alba/fol.hpp"
#include "alba/semantics.hpp"

namespace {

using namespace alba;

void BM_RunWorkedExample(benchmark::State& state) {
  const Inequality q = parse_inequality("T <= box(box p -> p)");
  for (auto _ : state) benchmark::DoNotOptimize(run(q));
}
BENCHMARK(BM_RunWorkedExample);

void BM_RunLargerInput(benchmark::State& state) {
  const Inequality q =
      parse_inequality("box(q -> p) /\\ box q /\\ (r -> box box p) <= box box p /\\ (r -> box q)");
  for (auto _ : state) benchmark::DoNotOptimize(run(q));
}
BENCHMARK(BM_RunLargerInput);

void BM_Simplify(benchmark::State& state) {
  const AlbaResult r = run(parse_inequality("box p <= box box p"));
  const FoSentence raw = correspondent(r.quasis);
  for (auto _ : state) benchmark::DoNotOptimize(simplify(raw));
}
BENCHMARK(BM_Simplify);

void BM_CorrespondenceCheck(benchmark::State& state) {
  const Inequality q = parse_inequality("box p <= box box p");
  const FoSentence fo = simplify(correspondent(run(q).quasis));
  const int max_n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(correspondence_check(q, fo, max_n));
}
BENCHMARK(BM_CorrespondenceCheck)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ParsePrint(benchmark::State& state) {
  const std::string text = "box(q /\\ box r -> box p) \\/ bdiam i0 <= (p -> q) -> box(r \\/ m1)";
  for (auto _ : state) benchmark::DoNotOptimize(to_string(parse_inequality(text)));
}
BENCHMARK(BM_ParsePrint);

}  // namespace

BENCHMARK_MAIN();
