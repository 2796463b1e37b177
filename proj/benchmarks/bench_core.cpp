#include <benchmark/benchmark.h>

#include <random>

#include "unitgroup/rings.hpp"

using namespace unitgroup;

namespace {

void BM_EchelonInsert(benchmark::State& state) {
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<BitVector> rows;
  for (int i = 0; i < 256; ++i) {
    BitVector v(len);
    for (std::size_t b = 0; b < len; ++b)
      if (rng() & 1) v.set(b);
    rows.push_back(std::move(v));
  }
  for (auto _ : state) {
    EchelonBasis basis(len);
    for (const auto& r : rows) basis.insert(r);
    benchmark::DoNotOptimize(basis.rank());
  }
}
BENCHMARK(BM_EchelonInsert)->Arg(720)->Arg(5040);

void BM_IdealClosureS4(benchmark::State& state) {
  const GroupPtr g = index_group(symmetric_group(4));
  const PermSet gens(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)});
  const AlgebraElement t4 = AlgebraElement::from_perms(
      g, {Permutation(4), parse_cycles("(2,4)", 4), parse_cycles("(1,2)(3,4)", 4),
          parse_cycles("(1,2,3,4)", 4)});
  const AlgebraElement x2 = AlgebraElement::from_set(
      g, generated_subgroup(
             PermSet(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3)", 4)})));
  for (auto _ : state) {
    const Ideal j1 = close(g, gens, {t4, x2});
    benchmark::DoNotOptimize(j1.dim());
  }
}
BENCHMARK(BM_IdealClosureS4);

void BM_IdealClosureS5(benchmark::State& state) {
  const GroupPtr g = index_group(symmetric_group(5));
  const PermSet gens(5, {parse_cycles("(1,2)", 5), parse_cycles("(1,2,3,4,5)", 5)});
  const Permutation tau = parse_cycles("(1,2,3,4,5)", 5);
  const AlgebraElement seed =
      AlgebraElement::from_perms(g, {tau.pow(2), tau.pow(3)});
  for (auto _ : state) {
    const Ideal i = close(g, gens, {seed});
    benchmark::DoNotOptimize(i.dim());
  }
}
BENCHMARK(BM_IdealClosureS5);

void BM_UnitScan128(benchmark::State& state) {
  const GroupPtr g = index_group(symmetric_group(4));
  const PermSet gens(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)});
  const AlgebraElement x1 = AlgebraElement::from_perms(
      g, {Permutation(4), parse_cycles("(2,4)", 4), parse_cycles("(1,2)(3,4)", 4),
          parse_cycles("(1,2,3,4)", 4)});
  const AlgebraElement x2 = AlgebraElement::from_set(
      g, generated_subgroup(
             PermSet(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3)", 4)})));
  const F2AlgebraTable table =
      to_table(QuotientRing::build(g, close(g, gens, {x1, x2})));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unit_scan(table).unit_count);
  }
}
BENCHMARK(BM_UnitScan128);

void BM_GL4UnitScan(benchmark::State& state) {
  const F2AlgebraTable m4 = matrix_ring(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(unit_scan(m4).unit_count);
  }
}
BENCHMARK(BM_GL4UnitScan);

void BM_NormalizerS7(benchmark::State& state) {
  const PermSet s7 = symmetric_group(7);
  const Permutation tau = parse_cycles("(1,2,3,4,5)", 7);
  const PermSet t(7, {Permutation(7), tau.pow(2), tau.pow(3)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalizer_of_set(s7, t).size());
  }
}
BENCHMARK(BM_NormalizerS7);

}  // namespace

BENCHMARK_MAIN();
