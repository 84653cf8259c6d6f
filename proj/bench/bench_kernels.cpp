// OpenMP kernels against the serial reference on the (Z/9)^4 workloads the
// certificate pipeline actually runs. Set OMP_NUM_THREADS to compare.
#include "knotcert/infection.hpp"
#include "knotcert/kernels.hpp"
#include "knotcert/paper_data.hpp"

#include <benchmark/benchmark.h>

using namespace knotcert;

namespace {

std::vector<Residues> unit_generators(std::size_t dim) {
  std::vector<Residues> g;
  for (std::size_t i = 0; i < dim; ++i) {
    Residues e(dim, 0);
    e[i] = 1;
    g.push_back(e);
  }
  return g;
}

const std::vector<Residues>& group94() {
  static const auto g = reference::enumerate_span(unit_generators(4), {9, 9, 9, 9}, 9, 4);
  return g;
}

template <bool Parallel>
void span(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto gens = unit_generators(dim);
  const std::vector<std::int64_t> orders(dim, 9);
  for (auto _ : state) {
    auto v = Parallel ? kernels::enumerate_span(gens, orders, 9, dim) : reference::enumerate_span(gens, orders, 9, dim);
    benchmark::DoNotOptimize(v.data());
  }
}

template <bool Parallel>
void cyclic(benchmark::State& state) {
  for (auto _ : state) {
    auto v = Parallel ? kernels::cyclic_subgroups(group94(), 9, 9) : reference::cyclic_subgroups(group94(), 9, 9);
    benchmark::DoNotOptimize(v.data());
  }
}

template <bool Parallel>
void elementary(benchmark::State& state) {
  for (auto _ : state) {
    auto v = Parallel ? kernels::elementary_rank2_subgroups(group94(), 3, 9)
                      : reference::elementary_rank2_subgroups(group94(), 3, 9);
    benchmark::DoNotOptimize(v.data());
  }
}

template <bool Parallel>
void sieve(benchmark::State& state) {
  const InfectionConfig cfg = default_paper_config();
  const auto chars = enumerate_characters(cfg.base, 9);
  auto keep = [&](std::size_t i) { return conditions_satisfied(cfg, chars[i]).all; };
  for (auto _ : state) {
    auto v = Parallel ? kernels::filter_indices(chars.size(), keep) : reference::filter_indices(chars.size(), keep);
    benchmark::DoNotOptimize(v.data());
  }
}

}  // namespace

BENCHMARK(span<false>)->Name("span/reference")->Arg(4)->Arg(6);
BENCHMARK(span<true>)->Name("span/openmp")->Arg(4)->Arg(6);
BENCHMARK(cyclic<false>)->Name("cyclic_subgroups/reference");
BENCHMARK(cyclic<true>)->Name("cyclic_subgroups/openmp");
BENCHMARK(elementary<false>)->Name("elementary_subgroups/reference");
BENCHMARK(elementary<true>)->Name("elementary_subgroups/openmp");
BENCHMARK(sieve<false>)->Name("sieve/reference");
BENCHMARK(sieve<true>)->Name("sieve/openmp");

BENCHMARK_MAIN();
