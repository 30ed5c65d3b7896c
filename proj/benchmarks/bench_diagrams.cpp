#include <benchmark/benchmark.h>

#include "supervogan/oracle.hpp"
#include "supervogan/render.hpp"

using namespace supervogan;

namespace {

DiagramPtr affine_of(const FamilyId& f) {
  const Diagram d = diagram_of(build_simple_system(f));
  return std::make_shared<Diagram>(affine_extension(d, lowest_root(f)));
}

void BM_build_affine(benchmark::State& state) {
  const auto f = make_family(Family::B, static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const Diagram d = diagram_of(build_simple_system(f));
    benchmark::DoNotOptimize(affine_extension(d, lowest_root(f)));
  }
}
BENCHMARK(BM_build_affine)->DenseRange(1, 4);

void BM_compute_marks(benchmark::State& state) {
  const auto ad = affine_of(make_family(Family::D, 4, 4));
  for (auto _ : state) benchmark::DoNotOptimize(compute_marks(*ad));
}
BENCHMARK(BM_compute_marks);

void BM_automorphisms(benchmark::State& state) {
  const auto ad = affine_of(make_family(Family::A, static_cast<int>(state.range(0)),
                                        static_cast<int>(state.range(0)) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(*ad));
}
BENCHMARK(BM_automorphisms)->DenseRange(2, 4);

void BM_vogan_classes(benchmark::State& state) {
  const auto d = std::make_shared<Diagram>(
      diagram_of(build_simple_system(make_family(Family::B, 2, 2))));
  for (auto _ : state) {
    const auto vs = enumerate_vogan(d);
    benchmark::DoNotOptimize(equivalence_classes(vs));
  }
}
BENCHMARK(BM_vogan_classes);

void BM_double_enumeration(benchmark::State& state) {
  const auto ad = affine_of(make_family(Family::B, 2, 2));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_almost_double(ad));
}
BENCHMARK(BM_double_enumeration);

void BM_pair_table(benchmark::State& state) {
  const auto f = make_family(Family::B, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pairs(f));
}
BENCHMARK(BM_pair_table);

void BM_json_roundtrip(benchmark::State& state) {
  const auto doc = document_of(*affine_of(make_family(Family::D, 3, 3)));
  const std::string text = to_json(doc);
  for (auto _ : state) benchmark::DoNotOptimize(diagram_from_json(text));
}
BENCHMARK(BM_json_roundtrip);

void BM_oracle_census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_involution_pairs(2, 1));
}
BENCHMARK(BM_oracle_census);

}  // namespace

BENCHMARK_MAIN();
