#include <benchmark/benchmark.h>

#include <chrono>

#include "infoimb/imbalance.hpp"
#include "infoimb/rng.hpp"

namespace {

infoimb::AlignedPanel make_panel(std::size_t n, std::size_t d) {
  infoimb::PortableRng rng(17);
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;
  for (std::size_t c = 0; c < d + 1; ++c) {
    names.push_back("c" + std::to_string(c));
    std::vector<double> col(n);
    for (double& v : col) v = rng.normal();
    cols.push_back(std::move(col));
  }
  std::vector<infoimb::Date> grid;
  infoimb::Date day = infoimb::parse_date("2014-01-01");
  for (std::size_t i = 0; i < n; ++i, day += std::chrono::days{1}) {
    grid.push_back(day);
  }
  return infoimb::AlignedPanel::from_raw(grid, names, cols, names.back());
}

void ImbalanceSingleColumn(benchmark::State& state) {
  const auto panel = make_panel(std::size_t(state.range(0)), 1);
  for (auto _ : state) {
    auto r = infoimb::information_imbalance(panel, {"c0"}, {"c1"});
    benchmark::DoNotOptimize(r.forward);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ImbalanceSingleColumn)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

void ImbalanceFiveColumns(benchmark::State& state) {
  const auto panel = make_panel(std::size_t(state.range(0)), 5);
  const std::vector<std::string> x = {"c0", "c1", "c2", "c3", "c4"};
  for (auto _ : state) {
    auto r = infoimb::information_imbalance(panel, x, {"c5"});
    benchmark::DoNotOptimize(r.forward);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ImbalanceFiveColumns)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

void FullRankMatrix(benchmark::State& state) {
  const auto panel = make_panel(std::size_t(state.range(0)), 1);
  for (auto _ : state) {
    auto rm = infoimb::rank_matrix(panel, {"c0"});
    benchmark::DoNotOptimize(rm.neighbor_order.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(FullRankMatrix)->RangeMultiplier(2)->Range(256, 1024)->Complexity();

}  // namespace
