// Microbenchmarks for the hot paths: digit expansion, automaton queries,
// configuration-sum dynamic programming, and the derived estimators.

#include <benchmark/benchmark.h>

#include "betathermo/automaton.hpp"
#include "betathermo/certified.hpp"
#include "betathermo/digits.hpp"
#include "betathermo/gibbs.hpp"
#include "betathermo/partition.hpp"
#include "betathermo/potential.hpp"
#include "betathermo/presets.hpp"
#include "betathermo/pressure.hpp"
#include "betathermo/suffix.hpp"

namespace bt = betathermo;

namespace {

void BM_ExpandQuadratic(benchmark::State& state) {
  bt::CertifiedReal beta = bt::parse_beta("(1+sqrt 5)/2");
  for (auto _ : state) {
    bt::DigitSeq d = bt::expand_one(beta, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(d.digits.data());
  }
}
BENCHMARK(BM_ExpandQuadratic)->Arg(64)->Arg(256);

void BM_ExpandRational(benchmark::State& state) {
  bt::CertifiedReal beta = bt::parse_beta("3/2");
  for (auto _ : state) {
    bt::DigitSeq d = bt::expand_one(beta, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(d.digits.data());
  }
}
BENCHMARK(BM_ExpandRational)->Arg(64)->Arg(512);

void BM_AutomatonBuild(benchmark::State& state) {
  bt::DigitSeq d = bt::make_preset("three-halves", static_cast<int>(state.range(0))).digits;
  for (auto _ : state) {
    bt::PrefixAutomaton a = bt::PrefixAutomaton::build(d);
    benchmark::DoNotOptimize(a.states());
  }
}
BENCHMARK(BM_AutomatonBuild)->Arg(64)->Arg(512);

void BM_CountWords(benchmark::State& state) {
  bt::PrefixAutomaton a = bt::PrefixAutomaton::build(bt::make_preset("golden").digits);
  for (auto _ : state) {
    bt::Integer c = a.count_words(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(c.backend());
  }
}
BENCHMARK(BM_CountWords)->Arg(20)->Arg(100);

void BM_EnumerateWords(benchmark::State& state) {
  bt::PrefixAutomaton a = bt::PrefixAutomaton::build(bt::make_preset("golden").digits);
  for (auto _ : state) {
    auto words = a.enumerate_words(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(words.data());
  }
}
BENCHMARK(BM_EnumerateWords)->Arg(12)->Arg(18);

void BM_LogPartition(benchmark::State& state) {
  bt::PrefixAutomaton a = bt::PrefixAutomaton::build(bt::make_preset("golden").digits);
  bt::Potential phi = bt::Potential::indicator(2, 1, 0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(bt::log_partition(a, phi, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LogPartition)->Arg(10)->Arg(30);

void BM_LogPartitionPinned(benchmark::State& state) {
  bt::PrefixAutomaton a = bt::PrefixAutomaton::build(bt::make_preset("golden").digits);
  bt::Potential phi = bt::Potential::indicator(2, 1, 0.5);
  bt::PinnedWindow pin{0, bt::Word{1, 0, 1}};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        bt::log_partition_pinned(a, phi, static_cast<int>(state.range(0)), pin));
}
BENCHMARK(BM_LogPartitionPinned)->Arg(10)->Arg(30);

void BM_CylinderDistribution(benchmark::State& state) {
  bt::PrefixAutomaton a = bt::PrefixAutomaton::build(bt::make_preset("golden").digits);
  bt::Potential zero = bt::Potential::zero(2);
  for (auto _ : state) {
    auto dist = bt::cylinder_distribution(a, zero, static_cast<int>(state.range(0)), 3);
    benchmark::DoNotOptimize(dist.size());
  }
}
BENCHMARK(BM_CylinderDistribution)->Arg(8)->Arg(12);

void BM_PressureEstimate(benchmark::State& state) {
  bt::PrefixAutomaton a = bt::PrefixAutomaton::build(bt::make_preset("golden").digits);
  bt::Potential zero = bt::Potential::zero(2);
  for (auto _ : state) {
    bt::PressureEstimate est = bt::estimate_pressure(a, zero, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(est.value);
  }
}
BENCHMARK(BM_PressureEstimate)->Arg(8)->Arg(12);

void BM_MarkovOracle(benchmark::State& state) {
  bt::PrefixAutomaton a = bt::PrefixAutomaton::build(bt::make_preset("tribonacci").digits);
  for (auto _ : state) {
    bt::MarkovOracle oracle(a);
    benchmark::DoNotOptimize(oracle.entropy());
  }
}
BENCHMARK(BM_MarkovOracle);

void BM_ZbarProfile(benchmark::State& state) {
  bt::DigitSeq d = bt::make_preset("witness").digits;
  for (auto _ : state) {
    bt::ZbarProfile prof = bt::zbar_profile(d, 250);
    benchmark::DoNotOptimize(prof.values.data());
  }
}
BENCHMARK(BM_ZbarProfile);

}  // namespace

BENCHMARK_MAIN();
