// Serial reference kernels against their OpenMP counterparts. The second
// benchmark argument selects the path: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "qperm/gradings/classify.hpp"
#include "qperm/groups/function_on_sn.hpp"
#include "qperm/groups/subgroups.hpp"
#include "qperm/ncalg/parse.hpp"
#include "qperm/qperm/presentation.hpp"
#include "qperm/qperm/quotient.hpp"
#include "qperm/rewrite/batch.hpp"

using namespace qperm;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

std::vector<NCPoly> random_polys(const AlphabetPtr& a, std::size_t count, int max_len) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(a->size()) - 1), len(1, max_len), coeff(-3, 3);
  std::vector<NCPoly> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<NCPoly::Term> terms;
    for (int t = 0; t < 6; ++t) {
      std::vector<Letter> w;
      for (int l = len(rng); l > 0; --l) w.push_back(static_cast<Letter>(letter(rng)));
      terms.emplace_back(Word(w), Rational(coeff(rng)));
    }
    out.push_back(NCPoly::from_terms(a, terms));
  }
  return out;
}

void BM_NormalForms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sys = complete_presentation(magic_presentation(n).algebra, 8).system;
  const auto polys = random_polys(sys.alphabet(), 512, 8);
  for (auto _ : state) benchmark::DoNotOptimize(normal_forms<Rational>(polys, sys, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(polys.size()));
}
BENCHMARK(BM_NormalForms)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_PiN(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto polys = random_polys(matrix_alphabet("u", n), 16, 6);
  for (auto _ : state)
    for (const auto& p : polys) benchmark::DoNotOptimize(pi_n(p, n, exec_of(state)));
}
BENCHMARK(BM_PiN)->ArgsProduct({{5, 6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ESigma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e_sigma_product_check(n, exec_of(state)));
}
BENCHMARK(BM_ESigma)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state) {
  const auto g = FiniteAbelianGroup::from_cyclic_orders({static_cast<unsigned>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g, exec_of(state)));
}
BENCHMARK(BM_CharacterTable)->ArgsProduct({{12, 30}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_BruteForceSubgroups(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(transitive_abelian_subgroups(n, SubgroupMode::brute_force, exec_of(state)));
}
BENCHMARK(BM_BruteForceSubgroups)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_VerifyGrading(benchmark::State& state) {
  const auto g = grading_from_regular_abelian(FiniteAbelianGroup::from_cyclic_orders({static_cast<unsigned>(state.range(0))}));
  for (auto _ : state) benchmark::DoNotOptimize(verify_grading(g, exec_of(state)));
}
BENCHMARK(BM_VerifyGrading)->ArgsProduct({{8, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_gradings(n, false, kDefaultClassifyLimit, exec_of(state)));
}
BENCHMARK(BM_Classify)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
