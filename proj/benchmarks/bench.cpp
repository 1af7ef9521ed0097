#include <benchmark/benchmark.h>

#include <random>

#include "foldcover/certify.hpp"
#include "foldcover/completion.hpp"
#include "foldcover/pipeline.hpp"

namespace fc = foldcover;

namespace {

fc::Word random_word(std::mt19937_64& rng, int alphabet, int len) {
  std::vector<fc::Letter> raw;
  while (static_cast<int>(raw.size()) < len) {
    fc::Letter l{static_cast<int>(rng() % alphabet), rng() % 2 ? 1 : -1};
    if (!raw.empty() && raw.back().gen == l.gen && raw.back().sign == -l.sign) continue;
    raw.push_back(l);
  }
  return fc::reduce(raw);
}

fc::LabeledGraph big_wedge(int words, int len) {
  std::mt19937_64 rng(9);
  fc::LabeledGraph g;
  g.alphabet = 5;
  g.base = g.add_vertex();
  for (int i = 0; i < words; ++i) fc::add_loop(g, random_word(rng, 5, len));
  return g;
}

void BM_fold(benchmark::State& state) {
  fc::LabeledGraph g = big_wedge(static_cast<int>(state.range(0)), 40);
  for (auto _ : state) benchmark::DoNotOptimize(fc::fold(g).graph.vertices);
}
BENCHMARK(BM_fold)->Arg(16)->Arg(64)->Arg(256);

void BM_completion(benchmark::State& state) {
  std::mt19937_64 rng(4);
  fc::SurfacePresentation pres{fc::Alphabet{1, 2}, {2}};
  std::vector<fc::Word> periph = {pres.peripheral_word(1), pres.peripheral_word(2)};
  fc::LabeledGraph g;
  for (;;) {
    fc::LabeledGraph raw;
    raw.alphabet = 3;
    raw.base = raw.add_vertex();
    for (int i = 0; i < state.range(0); ++i) fc::add_loop(raw, random_word(rng, 3, 12));
    g = fc::fold(raw).graph;
    bool ok = true;
    for (const fc::Word& x : periph)
      if (fc::has_power_loop(g, x, g.vertices)) ok = false;
    if (ok) break;
  }
  std::uint64_t seed = 0;
  for (auto _ : state) {
    fc::CompletionOptions opts;
    opts.seed = seed++;
    benchmark::DoNotOptimize(fc::regular_complete(g, periph, opts).graph.vertices);
  }
}
BENCHMARK(BM_completion)->Arg(4)->Arg(16);

void BM_family_build(benchmark::State& state) {
  fc::CoverSpec spec = fc::parse_cover_spec(
      R"({"genus":1,"boundary":[1,1],"d":[2,2],"w":["a1 b1"],"y":["a1"]})");
  for (auto _ : state) benchmark::DoNotOptimize(fc::build_family(spec).m_star);
}
BENCHMARK(BM_family_build)->Unit(benchmark::kMillisecond);

void BM_instantiate_and_verify(benchmark::State& state) {
  fc::CoverSpec spec = fc::parse_cover_spec(
      R"({"genus":1,"boundary":[1,1],"d":[2,2],"w":["a1 b1"],"y":["a1"]})");
  fc::CoverFamily fam = fc::build_family(spec);
  long long nstar = fam.min_degree + 2 * state.range(0);
  for (auto _ : state) {
    fc::LabeledGraph g = fc::instantiate(fam, nstar);
    benchmark::DoNotOptimize(fc::verify_certificate(g, spec, nstar).overall());
  }
}
BENCHMARK(BM_instantiate_and_verify)->Arg(0)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
