#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "infoimb/errors.hpp"
#include "infoimb/imbalance.hpp"
#include "oracles.hpp"

using namespace infoimb;

TEST_SUITE("imbalance") {

TEST_CASE("rank matrix on 1-D points {0, 1, 3}") {
  const auto panel = testutil::make_panel({"x"}, {{0.0, 1.0, 3.0}}, "x");
  const RankMatrix rm = rank_matrix(panel, {"x"});
  REQUIRE(rm.n == 3);
  CHECK(rm.neighbor_order[0] == std::vector<int>{1, 2});
  CHECK(rm.neighbor_order[1] == std::vector<int>{0, 2});
  CHECK(rm.neighbor_order[2] == std::vector<int>{1, 0});
}

TEST_CASE("rank matrix breaks exact ties toward the lower index") {
  // Point 0 is equidistant from points 1 and 2.
  const auto panel = testutil::make_panel(
      {"a", "b"}, {{0.0, 1.0, 0.0, 5.0}, {0.0, 0.0, 1.0, 5.0}}, "a");
  const RankMatrix rm = rank_matrix(panel, {"a", "b"});
  CHECK(rm.neighbor_order[0][0] == 1);
  CHECK(rm.neighbor_order[0][1] == 2);
  CHECK(rm.tied_nn_rows >= 1);
}

TEST_CASE("rank matrix rejects degenerate inputs") {
  const auto panel = testutil::make_panel({"x"}, {{0.0, 1.0, 3.0}}, "x");
  CHECK_THROWS_AS(rank_matrix(panel, {"nope"}), data_error);
  CHECK_THROWS_AS(rank_matrix(panel, {}), data_error);
  const auto tiny =
      testutil::make_panel({"x", "y"}, {{0.0, 1.0}, {0.0, 2.0}}, "y");
  CHECK_THROWS_AS(rank_matrix(tiny, {"x"}), data_error);
}

TEST_CASE("identity subset gives exactly 2/N in both directions") {
  for (const std::size_t n : {3u, 10u, 97u}) {
    PortableRng rng(n);
    const auto panel = testutil::make_panel(
        {"x"}, {testutil::random_column(rng, n)}, "x");
    const ImbalanceResult r = information_imbalance(panel, {"x"}, {"x"});
    CHECK(r.forward == 2.0 / double(n));  // bit-equal, not approximate
    CHECK(r.backward == 2.0 / double(n));
  }
}

TEST_CASE("independent noise sits near 1 in both directions") {
  std::vector<double> forwards;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PortableRng rng(seed);
    const std::size_t n = 800;
    const auto panel = testutil::make_panel(
        {"x", "y"},
        {testutil::random_column(rng, n), testutil::random_column(rng, n)},
        "y");
    forwards.push_back(information_imbalance(panel, {"x"}, {"y"}).forward);
  }
  const double mean = oracle::mean_of(forwards);
  CHECK(mean > 0.85);
  CHECK(mean < 1.15);
}

TEST_CASE("quadratic relation is strongly directional") {
  PortableRng rng(42);
  const std::size_t n = 1000;
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = rng.uniform(-1.0, 1.0);
    y[i] = x[i] * x[i] + 0.01 * rng.normal();
  }
  const auto panel = testutil::make_panel({"x", "y"}, {x, y}, "y");
  const ImbalanceResult r = information_imbalance(panel, {"x"}, {"y"});
  CHECK(r.forward < 0.5);
  CHECK(r.backward > r.forward + 0.2);
}

TEST_CASE("production path equals the full-sort oracle exactly") {
  PortableRng rng(7);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 5 + std::size_t(rng.below(46));
    const std::size_t dx = 1 + std::size_t(rng.below(3));
    const std::size_t dy = 1 + std::size_t(rng.below(2));
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols;
    for (std::size_t c = 0; c < dx + dy; ++c) {
      names.push_back("c" + std::to_string(c));
      cols.push_back(testutil::random_column(rng, n));
    }
    const auto panel = testutil::make_panel(names, cols, names.back());
    const std::vector<std::string> x(names.begin(), names.begin() + dx);
    const std::vector<std::string> y(names.begin() + dx, names.end());
    const ImbalanceResult r = information_imbalance(panel, x, y);
    CHECK(r.forward == oracle::brute_force_imbalance(panel, x, y));
    CHECK(r.backward == oracle::brute_force_imbalance(panel, y, x));
  }
}

TEST_CASE("bounds hold even on duplicate-heavy data") {
  PortableRng rng(13);
  const std::size_t n = 60;
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = double(i % 5);  // heavy ties
    y[i] = rng.normal();
  }
  const auto panel = testutil::make_panel({"x", "y"}, {x, y}, "y");
  const ImbalanceResult r = information_imbalance(panel, {"x"}, {"y"});
  const double lo = 2.0 / double(n);
  const double hi = 2.0 * double(n - 1) / double(n);
  CHECK(r.forward >= lo);
  CHECK(r.forward <= hi);
  CHECK(r.backward >= lo);
  CHECK(r.backward <= hi);
  CHECK(r.tie_fraction > 0.01);
}

TEST_CASE("positive affine maps leave neighbor order and both imbalances "
          "bit-identical") {
  PortableRng rng(19);
  const std::size_t n = 128;
  const std::vector<double> x = testutil::random_column(rng, n);
  const std::vector<double> y = testutil::random_column(rng, n);
  std::vector<double> mapped(x);
  for (double& v : mapped) v = 3.7 * v - 11.25;

  const auto p1 = testutil::make_panel({"x", "y"}, {x, y}, "y");
  const auto p2 = testutil::make_panel({"x", "y"}, {mapped, y}, "y");

  const RankMatrix r1 = rank_matrix(p1, {"x"});
  const RankMatrix r2 = rank_matrix(p2, {"x"});
  CHECK(r1.neighbor_order == r2.neighbor_order);

  const ImbalanceResult i1 = information_imbalance(p1, {"x"}, {"y"});
  const ImbalanceResult i2 = information_imbalance(p2, {"x"}, {"y"});
  CHECK(i1.forward == i2.forward);  // integer rank sums, so bit-equal
  CHECK(i1.backward == i2.backward);
}

TEST_CASE("relabeling the points leaves the imbalance unchanged") {
  PortableRng rng(23);
  const std::size_t n = 90;
  std::vector<double> x = testutil::random_column(rng, n);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = 0.8 * x[i] + 0.3 * rng.normal();

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  for (std::size_t i = n; i-- > 1;) {
    std::swap(perm[i], perm[rng.below(i + 1)]);
  }
  std::vector<double> px(n), py(n);
  for (std::size_t i = 0; i < n; ++i) {
    px[i] = x[perm[i]];
    py[i] = y[perm[i]];
  }
  const auto p1 = testutil::make_panel({"x", "y"}, {x, y}, "y");
  const auto p2 = testutil::make_panel({"x", "y"}, {px, py}, "y");
  const ImbalanceResult i1 = information_imbalance(p1, {"x"}, {"y"});
  const ImbalanceResult i2 = information_imbalance(p2, {"x"}, {"y"});
  CHECK(i1.forward == i2.forward);
  CHECK(i1.backward == i2.backward);
}

TEST_CASE("imbalance plane") {
  PortableRng rng(31);
  const std::size_t n = 50;
  const auto panel = testutil::make_panel(
      {"a", "b", "t"},
      {testutil::random_column(rng, n), testutil::random_column(rng, n),
       testutil::random_column(rng, n)},
      "t");

  SUBCASE("identity candidate lands at (2/N, 2/N)") {
    const auto plane = imbalance_plane(panel, {{"t"}}, {"t"});
    REQUIRE(plane.size() == 1);
    CHECK(plane[0].forward == 2.0 / double(n));
    CHECK(plane[0].backward == 2.0 / double(n));
  }
  SUBCASE("empty candidate list gives an empty plane") {
    CHECK(imbalance_plane(panel, {}, {"t"}).empty());
  }
  SUBCASE("order is preserved") {
    const auto plane = imbalance_plane(panel, {{"b"}, {"a"}}, {"t"});
    REQUIRE(plane.size() == 2);
    CHECK(plane[0].x_columns == std::vector<std::string>{"b"});
    CHECK(plane[1].x_columns == std::vector<std::string>{"a"});
  }
}

}  // TEST_SUITE
