#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "infoimb/errors.hpp"
#include "infoimb/freq_scan.hpp"
#include "infoimb/resample.hpp"
#include "infoimb/synth.hpp"

using namespace infoimb;

namespace {

TimeSeries daily_from(std::vector<double> values, const char* name) {
  std::vector<Date> ts;
  Date d = parse_date("2014-01-01");
  for (std::size_t i = 0; i < values.size(); ++i, d += std::chrono::days{1}) {
    ts.push_back(d);
  }
  return TimeSeries::checked(name, ts, std::move(values), Frequency::daily);
}

}  // namespace

TEST_SUITE("freq_scan") {

TEST_CASE("shift pairs predictor rows with later target rows") {
  const std::size_t n = 12;
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = double(i) + 0.01 * double(i % 3);   // tagged, non-constant
    y[i] = 1000.0 * double(i) + double(i % 2);
  }
  const auto panel = testutil::make_panel({"x", "y"}, {x, y}, "y");
  const AlignedPanel shifted = shift_panel(panel, 1, true);

  REQUIRE(shifted.rows() == n - 1);  // the unpaired last row is dropped
  REQUIRE(shifted.has_column("y_lag1"));

  const auto xs = shifted.original(shifted.index_of("x"));
  const auto ys = shifted.original(shifted.index_of("y"));
  const auto lag = shifted.original(shifted.index_of("y_lag1"));
  for (std::size_t t = 0; t < n - 1; ++t) {
    CHECK(xs[t] == doctest::Approx(x[t]).epsilon(1e-12));
    CHECK(ys[t] == doctest::Approx(y[t + 1]).epsilon(1e-12));
    CHECK(lag[t] == doctest::Approx(y[t]).epsilon(1e-12));
  }
  // Row dates carry the target's timestamp.
  CHECK(shifted.grid().front() == panel.grid()[1]);
}

TEST_CASE("delta_t = 0 keeps the lagged target out of the pool") {
  PortableRng rng(1);
  const std::size_t n = 60;
  const auto series = std::vector<TimeSeries>{
      daily_from(testutil::random_column(rng, n), "a"),
      daily_from(testutil::random_column(rng, n), "t")};
  const ScanReport report =
      scan(series, {Frequency::daily}, {0}, "t", 2, 0.0);
  REQUIRE(report.cells.size() == 1);
  CHECK(report.cells[0].trace.candidate_pool ==
        std::vector<std::string>{"a"});
}

TEST_CASE("single frequency, single lag reduces to one greedy trace") {
  PortableRng rng(2);
  const std::size_t n = 80;
  std::vector<double> a = testutil::random_column(rng, n);
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = a[i] + 0.4 * rng.normal();
  const std::vector<TimeSeries> series = {daily_from(a, "a"),
                                          daily_from(t, "t")};
  const ScanReport report =
      scan(series, {Frequency::daily}, {0}, "t", 2, 0.01);
  REQUIRE(report.cells.size() == 1);

  const AlignedPanel panel = resample_panel(series, Frequency::daily, "t");
  const GreedyTrace direct =
      greedy_select(panel, panel.candidate_names(), {"t"}, 2, 0.01);
  REQUIRE(report.cells[0].trace.steps.size() == direct.steps.size());
  for (std::size_t i = 0; i < direct.steps.size(); ++i) {
    CHECK(report.cells[0].trace.steps[i].added_column ==
          direct.steps[i].added_column);
    CHECK(report.cells[0].trace.steps[i].forward == direct.steps[i].forward);
  }
}

TEST_CASE("autocorrelated target: its lag wins the first pick") {
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SynthSpec spec;
    spec.regime = Regime::ar1;
    spec.phi = 0.95;
    spec.n = 300;
    spec.seed = seed;
    TimeSeries target = generate_series(spec);
    target.name = "t";

    PortableRng rng(seed + 500);
    const std::vector<TimeSeries> series = {
        target, daily_from(testutil::random_column(rng, spec.n), "a"),
        daily_from(testutil::random_column(rng, spec.n), "b")};
    const ScanReport report =
        scan(series, {Frequency::daily}, {1}, "t", 1, 0.0);
    REQUIRE(report.cells.size() == 1);
    REQUIRE(report.cells[0].trace.steps.size() == 1);
    if (report.cells[0].trace.steps[0].added_column == "t_lag1") ++hits;
  }
  CHECK(hits >= 18);
}

TEST_CASE("cell order follows the requested frequency order") {
  PortableRng rng(4);
  const std::size_t n = 150;
  std::vector<double> a = testutil::random_column(rng, n);
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = 0.7 * a[i] + 0.3 * rng.normal();
  const std::vector<TimeSeries> series = {daily_from(a, "a"),
                                          daily_from(t, "t")};

  const ScanReport fwd =
      scan(series, {Frequency::daily, Frequency::weekly}, {0}, "t", 1, 0.0);
  const ScanReport rev =
      scan(series, {Frequency::weekly, Frequency::daily}, {0}, "t", 1, 0.0);
  REQUIRE(fwd.cells.size() == 2);
  REQUIRE(rev.cells.size() == 2);
  // Same cells, order swapped.
  CHECK(fwd.cells[0].frequency == rev.cells[1].frequency);
  CHECK(fwd.cells[0].trace.steps[0].forward ==
        rev.cells[1].trace.steps[0].forward);
  CHECK(fwd.cells[1].trace.steps[0].forward ==
        rev.cells[0].trace.steps[0].forward);
  // And the winner is independent of the scan order.
  REQUIRE(!fwd.best.empty());
  REQUIRE(!rev.best.empty());
  CHECK(fwd.best[0].frequency == rev.best[0].frequency);
}

TEST_CASE("validation") {
  PortableRng rng(5);
  const std::vector<TimeSeries> series = {
      daily_from(testutil::random_column(rng, 40), "a"),
      daily_from(testutil::random_column(rng, 40), "t")};
  CHECK_THROWS_AS(scan(series, {}, {0}, "t", 2), data_error);
  CHECK_THROWS_AS(scan(series, {Frequency::daily}, {}, "t", 2), data_error);
  CHECK_THROWS_AS(scan(series, {Frequency::daily}, {2}, "t", 2), data_error);
  CHECK_THROWS_AS(scan(series, {Frequency::daily}, {0}, "zz", 2), data_error);
}

}  // TEST_SUITE
