#include <benchmark/benchmark.h>

#include "psl2cov/cyclotomic.hpp"
#include "psl2cov/explicit_oracle.hpp"
#include "psl2cov/psl2_tables.hpp"
#include "psl2cov/tensor_covering.hpp"

namespace {

using namespace psl2cov;

void BM_CyclotomicMultiply(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto params = group_params(q);
  const auto n = params.conductor;
  const auto x = Cyclotomic::root(n, static_cast<std::int64_t>(n / (q - 1))) +
                 Cyclotomic::root(n, -static_cast<std::int64_t>(n / (q - 1)));
  const auto y = Cyclotomic::root(n, static_cast<std::int64_t>(n / (q + 1))) * BigInt(-1) +
                 Cyclotomic::root(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(11)->Arg(49)->Arg(101);

void BM_CyclotomicEquality(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto n = group_params(q).conductor;
  const auto eps = Cyclotomic::root(n, static_cast<std::int64_t>(n / (q - 1)));
  Cyclotomic sum(0);
  for (std::uint64_t a = 1; a < q - 1; ++a) sum += eps.pow(static_cast<unsigned>(a));
  const Cyclotomic minus_one(-1);
  for (auto _ : state) benchmark::DoNotOptimize(sum == minus_one);
}
BENCHMARK(BM_CyclotomicEquality)->Arg(11)->Arg(49)->Arg(101);

void BM_CharacterTable(benchmark::State& state) {
  const auto params = group_params(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(params));
}
BENCHMARK(BM_CharacterTable)->Arg(32)->Arg(81)->Arg(101);

void BM_InnerProduct(benchmark::State& state) {
  const auto table = character_table(group_params(static_cast<std::uint64_t>(state.range(0))));
  const auto& chi = table.characters().back();
  const auto f = pointwise_power(chi, 3);
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(table, f, chi));
}
BENCHMARK(BM_InnerProduct)->Arg(32)->Arg(81)->Arg(101);

void BM_CoveringReport(benchmark::State& state) {
  const auto table = character_table(group_params(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(covering_report(table));
}
BENCHMARK(BM_CoveringReport)->Arg(8)->Arg(32)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_ExplicitGroup(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::ExplicitGroup::build(q));
}
BENCHMARK(BM_ExplicitGroup)->Arg(13)->Arg(27)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
