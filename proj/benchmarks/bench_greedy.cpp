#include <benchmark/benchmark.h>

#include <chrono>

#include "infoimb/greedy.hpp"
#include "infoimb/rng.hpp"

namespace {

void GreedyThreeSteps(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  infoimb::PortableRng rng(31);
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;
  for (int c = 0; c < 10; ++c) {
    names.push_back("p" + std::to_string(c));
    std::vector<double> col(n);
    for (double& v : col) v = rng.normal();
    cols.push_back(std::move(col));
  }
  std::vector<double> target(n);
  for (std::size_t i = 0; i < n; ++i) {
    target[i] = cols[0][i] + 0.5 * cols[1][i] + 0.3 * rng.normal();
  }
  names.push_back("t");
  cols.push_back(target);
  std::vector<infoimb::Date> grid;
  infoimb::Date day = infoimb::parse_date("2014-01-01");
  for (std::size_t i = 0; i < n; ++i, day += std::chrono::days{1}) {
    grid.push_back(day);
  }
  const auto panel =
      infoimb::AlignedPanel::from_raw(grid, names, cols, "t");
  const std::vector<std::string> candidates(names.begin(), names.end() - 1);

  for (auto _ : state) {
    auto trace = infoimb::greedy_select(panel, candidates, {"t"}, 3, 0.0);
    benchmark::DoNotOptimize(trace.steps.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(GreedyThreeSteps)->RangeMultiplier(2)->Range(128, 1024)->Complexity();

}  // namespace
