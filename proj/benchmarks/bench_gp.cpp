#include <benchmark/benchmark.h>

#include "infoimb/gp.hpp"
#include "infoimb/rng.hpp"

namespace {

struct Problem {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
};

Problem make_problem(int m, int d) {
  infoimb::PortableRng rng(23);
  Problem p;
  p.x.resize(m, d);
  p.y.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) p.x(i, j) = rng.normal();
    p.y(i) = rng.normal();
  }
  return p;
}

void GpFit(benchmark::State& state) {
  const Problem p = make_problem(int(state.range(0)), 3);
  infoimb::KernelConfig cfg;
  for (auto _ : state) {
    auto model = infoimb::fit(p.x, p.y, cfg, 1e-3);
    benchmark::DoNotOptimize(model.alpha.sum());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(GpFit)->RangeMultiplier(2)->Range(64, 512)->Complexity();

void GpLengthScaleSearch(benchmark::State& state) {
  const Problem p = make_problem(int(state.range(0)), 1);
  for (auto _ : state) {
    auto cfg = infoimb::optimize_length_scale(p.x, p.y, infoimb::KernelConfig{},
                                              1e-3);
    benchmark::DoNotOptimize(cfg.length_scale);
  }
}
BENCHMARK(GpLengthScaleSearch)->Arg(128)->Arg(256);

void GpPredict(benchmark::State& state) {
  const Problem p = make_problem(256, 3);
  infoimb::KernelConfig cfg;
  const auto model = infoimb::fit(p.x, p.y, cfg, 1e-3);
  infoimb::PortableRng rng(29);
  Eigen::VectorXd q(3);
  for (auto _ : state) {
    for (int j = 0; j < 3; ++j) q(j) = rng.normal();
    benchmark::DoNotOptimize(infoimb::predict_mean(model, q));
  }
}
BENCHMARK(GpPredict);

}  // namespace
