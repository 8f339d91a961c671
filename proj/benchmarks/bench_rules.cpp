#include <benchmark/benchmark.h>

#include "psr/apportion.hpp"
#include "psr/optrules.hpp"
#include "psr/rules.hpp"
#include "psr/sampling.hpp"

namespace {

using namespace psr;

Profile make_profile(int parties, int voters, uint64_t seed) {
  CounterRng rng(seed);
  std::vector<std::string> ids;
  for (int i = 0; i < parties; ++i) ids.push_back("p" + std::to_string(i));
  auto roster = std::make_shared<const Roster>(Roster::from_ids(ids));
  return random_profile_over(rng, roster, voters);
}

void BM_rule_small(benchmark::State& state, RuleId rule) {
  Profile p = make_profile(5, 10, 42);
  Threshold tau{Rational(3)};
  for (auto _ : state) benchmark::DoNotOptimize(run_rule(rule, p, tau).outcome.mask());
}

void BM_rule_electorate(benchmark::State& state, RuleId rule) {
  Profile p = make_profile(10, 2000, 42);
  Threshold tau{Rational(100)};
  for (auto _ : state) benchmark::DoNotOptimize(run_rule(rule, p, tau).outcome.mask());
}

void BM_maxp_bnb(benchmark::State& state) {
  Profile p = make_profile(static_cast<int>(state.range(0)), 60, 7);
  Threshold tau{Rational(4)};
  for (auto _ : state) benchmark::DoNotOptimize(run_maxp(p, tau).outcome.mask());
}

void BM_enumerate_feasible(benchmark::State& state) {
  Profile p = make_profile(static_cast<int>(state.range(0)), 60, 7);
  Threshold tau{Rational(4)};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_feasible(p, tau).size());
}

void BM_dhondt(benchmark::State& state) {
  std::vector<Rational> scores;
  CounterRng rng(3);
  for (int i = 0; i < 12; ++i) scores.push_back(Rational(rng.uniform_int(1, 5000)));
  for (auto _ : state)
    benchmark::DoNotOptimize(dhondt(scores, static_cast<int>(state.range(0))).house_size);
}

}  // namespace

BENCHMARK_CAPTURE(BM_rule_small, do, psr::RuleId::Do);
BENCHMARK_CAPTURE(BM_rule_small, stv, psr::RuleId::Stv);
BENCHMARK_CAPTURE(BM_rule_small, gp, psr::RuleId::Gp);
BENCHMARK_CAPTURE(BM_rule_electorate, do, psr::RuleId::Do);
BENCHMARK_CAPTURE(BM_rule_electorate, stv, psr::RuleId::Stv);
BENCHMARK_CAPTURE(BM_rule_electorate, gp, psr::RuleId::Gp);
BENCHMARK(BM_maxp_bnb)->Arg(8)->Arg(12);
BENCHMARK(BM_enumerate_feasible)->Arg(8)->Arg(12);
BENCHMARK(BM_dhondt)->Arg(10)->Arg(200);

BENCHMARK_MAIN();
