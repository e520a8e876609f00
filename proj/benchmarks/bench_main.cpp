#include <benchmark/benchmark.h>

#include "pgc/catalog.hpp"
#include "pgc/commat.hpp"
#include "pgc/enumctr.hpp"
#include "pgc/field.hpp"
#include "pgc/freenil.hpp"
#include "pgc/lazard.hpp"

namespace {

pgc::CoefficientRing prime_field(std::uint32_t p, std::uint32_t f = 1) {
  return pgc::CoefficientRing::field(pgc::gf::make_field(p, f));
}

void BM_FieldMul(benchmark::State& state) {
  pgc::gf::Field F(pgc::gf::make_field(5, static_cast<std::uint32_t>(state.range(0))));
  const auto q = F.order();
  pgc::gf::Elem acc = 1;
  for (auto _ : state) {
    for (pgc::gf::Elem x = 1; x < q; ++x) acc = F.add(F.mul(acc, x), 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (q - 1));
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(2)->Arg(4);

void BM_RankDistributionB(benchmark::State& state) {
  auto t = pgc::freenil::free_table(2, 4, prime_field(static_cast<std::uint32_t>(state.range(0))));
  auto mats = pgc::commat::commutator_matrices(t);
  const auto& F = t.ring().field();
  for (auto _ : state) benchmark::DoNotOptimize(pgc::enumctr::rank_distribution_B(F, mats.B));
}
BENCHMARK(BM_RankDistributionB)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BostonIsaacsVectors(benchmark::State& state) {
  auto t = pgc::catalog::boston_isaacs_table(2, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pgc::enumctr::vectors_matrix(t));
}
BENCHMARK(BM_BostonIsaacsVectors)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ConjugacyOracle(benchmark::State& state) {
  auto t = pgc::freenil::free_table(2, 3, prime_field(5));
  for (auto _ : state) benchmark::DoNotOptimize(pgc::lazard::conjugacy_census(t));
}
BENCHMARK(BM_ConjugacyOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
