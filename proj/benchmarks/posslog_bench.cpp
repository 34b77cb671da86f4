#include <benchmark/benchmark.h>

#include <random>

#include "posslog/fusion.hpp"
#include "posslog/lpl.hpp"
#include "posslog/prover.hpp"

using namespace posslog;

namespace {

KnowledgeBase robot_base() {
  auto wf = [](const char* f, int num, int den) {
    return WeightedFormula(parse_formula(f), Degree(num, den));
  };
  return KnowledgeBase({wf("D & E & F -> H", 1, 1), wf("B & C -> D", 1, 2),
                        wf("A & B -> D", 4, 5), wf("G -> H", 1, 1),
                        wf("A", 2, 5), wf("B", 1, 2), wf("C", 4, 5),
                        wf("E", 7, 10), wf("F", 2, 5), wf("G", 3, 5)});
}

KnowledgeBase chain_base(int atoms) {
  std::vector<WeightedFormula> items;
  for (int i = 0; i + 1 < atoms; ++i) {
    std::string rule = "x" + std::to_string(i) + " -> x" + std::to_string(i + 1);
    items.emplace_back(parse_formula(rule), Degree(i % 9 + 1, 10));
  }
  items.emplace_back(parse_formula("x0"), Degree(9, 10));
  return KnowledgeBase(std::move(items));
}

void BM_least_specific(benchmark::State& state) {
  auto base = chain_base(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(least_specific(base));
  }
}
BENCHMARK(BM_least_specific)->Arg(8)->Arg(12)->Arg(16);

void BM_prove_pref(benchmark::State& state) {
  auto base = robot_base();
  Formula goal = parse_formula("H");
  for (auto _ : state) {
    benchmark::DoNotOptimize(prove_pref(base, goal));
  }
}
BENCHMARK(BM_prove_pref);

void BM_merge_conjunctive(benchmark::State& state) {
  auto fs = chain_base(static_cast<int>(state.range(0)));
  auto fc = robot_base();
  for (auto _ : state) {
    benchmark::DoNotOptimize(merge_conjunctive(fs, fc, NormFamily::product()));
  }
}
BENCHMARK(BM_merge_conjunctive)->Arg(8)->Arg(16);

void BM_truth_value(benchmark::State& state) {
  auto base = chain_base(static_cast<int>(state.range(0)));
  LplFormula translated = translate_spl(base);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        truth_value(translated, base.universe(), NormFamily::product()));
  }
}
BENCHMARK(BM_truth_value)->Arg(8)->Arg(12);

void BM_to_cnf(benchmark::State& state) {
  Formula f = parse_formula(
      "(A & B -> C | D) & (C -> E & F) & !(G & H -> A) | (E -> !F)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_cnf(f));
  }
}
BENCHMARK(BM_to_cnf);

}  // namespace

BENCHMARK_MAIN();
