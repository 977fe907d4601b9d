#include <benchmark/benchmark.h>

#include <random>

#include "bsrbd/decide.hpp"
#include "bsrbd/frontend.hpp"
#include "bsrbd/linarith.hpp"
#include "bsrbd/ramsey.hpp"
#include "bsrbd/regions.hpp"
#include "bsrbd/timed.hpp"
#include "support/generators.hpp"
#include "support/ground_oracle.hpp"

namespace {

using namespace bsrbd;

void BM_CountBounded(benchmark::State& st) {
  const auto s = RegionScheme::bounded(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_classes(s, static_cast<std::uint32_t>(st.range(1))));
}
BENCHMARK(BM_CountBounded)->ArgsProduct({{1, 2}, {1, 2, 3}});

void BM_EnumerateSlr(benchmark::State& st) {
  std::vector<Rational> pts;
  for (long i = 0; i < st.range(0); ++i) pts.push_back(Rational(i));
  const auto s = RegionScheme::slr(PartitionJ(pts));
  for (auto _ : st) {
    std::uint64_t n = 0;
    enumerate_classes(s, static_cast<std::uint32_t>(st.range(1)), [&](const RegionClass&) { return ++n, true; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateSlr)->ArgsProduct({{0, 1, 2}, {1, 2, 3}});

std::vector<NormalizedClauseSet> corpus(Mode mode, unsigned seed, int count) {
  gen::SetShape sh;
  sh.mode = mode;
  sh.clauses = 3;
  if (mode == Mode::BD) sh.rationals = {Rational(-1), Rational(0), Rational(1)};
  else sh.skolems = 2, sh.max_base_arity = 1;
  std::mt19937 rng(seed);
  std::vector<NormalizedClauseSet> out;
  for (int i = 0; i < count; ++i) out.push_back(normalize(gen::random_clause_set(rng, sh)));
  return out;
}

void BM_DecideCorpus(benchmark::State& st) {
  const auto sets = corpus(st.range(0) ? Mode::SLR : Mode::BD, 7, 20);
  DecideOptions opt;
  opt.symmetry = st.range(1) != 0;
  for (auto _ : st)
    for (const auto& n : sets) benchmark::DoNotOptimize(decide(n, opt).sat);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(sets.size()));
}
BENCHMARK(BM_DecideCorpus)->ArgNames({"slr", "symmetry"})->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_FourierMotzkin(benchmark::State& st) {
  std::mt19937 rng(11);
  std::vector<GroundSystem> systems;
  for (int i = 0; i < 100; ++i) systems.push_back(oracle::random_system(rng, static_cast<std::size_t>(st.range(0)), 4));
  for (auto _ : st)
    for (const auto& s : systems) benchmark::DoNotOptimize(solve_ground(s));
  st.SetItemsProcessed(st.iterations() * 100);
}
BENCHMARK(BM_FourierMotzkin)->DenseRange(1, 3);

const char* kTwoClocks =
    "clocks x y\nloc l0 init inv x <= 2\nloc l1\n"
    "trans l0 -> l1 guard x >= 1 && y < 2 reset {x}\n";

void BM_RegionReach(benchmark::State& st) {
  const auto a = parse_ta(kTwoClocks);
  const auto q = parse_goal(a, "l1:x = 0 && y = 1");
  for (auto _ : st) benchmark::DoNotOptimize(region_reach(a, q));
}
BENCHMARK(BM_RegionReach);

void BM_ReachByDecide(benchmark::State& st) {
  const auto a = parse_ta(kTwoClocks);
  const auto q = parse_goal(a, "l1:x = 0 && y = 1");
  for (auto _ : st) benchmark::DoNotOptimize(decide(normalize(encode_reachability(a, q))).sat);
}
BENCHMARK(BM_ReachByDecide)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_MonoAscending(benchmark::State& st) {
  std::vector<Rational> r;
  for (long i = 1; i <= st.range(0); ++i) r.push_back(Rational(i));
  const ColoringOracle chi{[](std::span<const Rational> t) {
                             return static_cast<Color>(to_int64((t[1] - t[0]).floor()) % 3);
                           },
                           3};
  for (auto _ : st) benchmark::DoNotOptimize(mono_ascending(r, 2, 3, chi));
}
BENCHMARK(BM_MonoAscending)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
