// Serial reference kernels against their OpenMP versions on the same inputs.

#include <benchmark/benchmark.h>

#include "wreath/actions.hpp"
#include "wreath/kernels.hpp"

using namespace wreath;

namespace {

const PermGroup& group(int which) {
  static const PermGroup groups[] = {family("symmetric:8"), family("subsets:6,2"), family("product:3,1,2")};
  return groups[which];
}

const char* group_name(int which) {
  static const char* names[] = {"symmetric:8", "subsets:6,2", "product:3,1,2"};
  return names[which];
}

template <auto Fn>
void sigma_histogram(benchmark::State& state) {
  const auto& h = group(static_cast<int>(state.range(0)));
  h.elements();
  state.SetLabel(group_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(h));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(h.size()));
}

// dihedral:n at k = 2 over 2^n colorings.
template <auto Fn>
void lexmin_scan(benchmark::State& state) {
  const auto h = family("dihedral:" + std::to_string(state.range(0)));
  const kernels::ColoringAction act(h, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(act));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(act.space()));
}

template <auto Fn>
void fill_class_counts(benchmark::State& state) {
  const auto h = family("subsets:5,2");
  const kernels::ColoringAction act(h, 2);
  const auto census = kernels::serial::lexmin_scan(act);
  for (auto _ : state) {
    auto stabilizers = census.stabilizers;
    Fn(h, stabilizers);
    benchmark::DoNotOptimize(stabilizers.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(census.stabilizers.size()));
}

template <auto Fn>
void fix_subset_exhaustive(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::uint64_t checks = 0;
  for (auto _ : state) checks += Fn(m).checks;
  state.SetItemsProcessed(static_cast<std::int64_t>(checks));
}

}  // namespace

BENCHMARK(sigma_histogram<kernels::serial::sigma_histogram>)->Name("sigma_histogram/serial")->DenseRange(0, 2);
BENCHMARK(sigma_histogram<kernels::omp::sigma_histogram>)->Name("sigma_histogram/omp")->DenseRange(0, 2);
BENCHMARK(lexmin_scan<kernels::serial::lexmin_scan>)->Name("lexmin_scan/serial")->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(lexmin_scan<kernels::omp::lexmin_scan>)->Name("lexmin_scan/omp")->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(fill_class_counts<kernels::serial::fill_class_counts>)->Name("fill_class_counts/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(fill_class_counts<kernels::omp::fill_class_counts>)->Name("fill_class_counts/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(fix_subset_exhaustive<kernels::serial::fix_subset_exhaustive>)->Name("fix_subset_exhaustive/serial")->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(fix_subset_exhaustive<kernels::omp::fix_subset_exhaustive>)->Name("fix_subset_exhaustive/omp")->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
