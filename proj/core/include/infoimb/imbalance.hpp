#pragma once

#include <string>
#include <vector>

#include "infoimb/panel.hpp"

namespace infoimb {

/// Per-row neighbor ordering under the Euclidean distance on a column subset.
/// Row i holds the other n-1 point indices sorted by ascending distance,
/// equal distances broken by ascending point index. rank of j w.r.t. i is
/// its position + 1.
struct RankMatrix {
  std::size_t n = 0;
  std::vector<std::vector<int>> neighbor_order;
  /// Rows whose nearest neighbor distance is attained by more than one point.
  std::size_t tied_nn_rows = 0;
  std::string tie_policy = "ascending point index";
};

/// The pair (forward, backward) = (D(X->Y), D(Y->X)) for one column pair.
/// Both lie in [2/n, 2(n-1)/n]; 2/n means X's nearest neighbor is also Y's
/// for every point, values near 1 mean no shared neighborhood structure.
struct ImbalanceResult {
  double forward = 0.0;
  double backward = 0.0;
  std::size_t n = 0;
  std::vector<std::string> x_columns;
  std::vector<std::string> y_columns;
  /// Fraction of rows with tied nearest neighbors, max over both directions.
  /// Above 1% the estimate is sensitive to the tie policy.
  double tie_fraction = 0.0;
};

/// Squared Euclidean distance between rows i and j over the given columns,
/// accumulated in column order. Every rank computation in this module and
/// in greedy selection uses exactly this accumulation, so results are
/// bit-reproducible across code paths.
double pair_distance_sq(const std::vector<const std::vector<double>*>& cols,
                        std::size_t i, std::size_t j);

/// Resolve column names to standardized column pointers.
std::vector<const std::vector<double>*> resolve_columns(
    const AlignedPanel& panel, const std::vector<std::string>& columns);

/// Full neighbor ordering for every row. O(n^2 log n). Requires n >= 3.
RankMatrix rank_matrix(const AlignedPanel& panel,
                       const std::vector<std::string>& columns);

/// Information Imbalance between two column subsets:
///   forward = 2/n * mean over i of rank_Y(i, nn_X(i))
/// computed as 2 * sum(ranks) / n^2, with nn_X(i) the unique rank-1 neighbor
/// under X (ties to the lowest index). backward is the symmetric quantity.
ImbalanceResult information_imbalance(const AlignedPanel& panel,
                                      const std::vector<std::string>& x,
                                      const std::vector<std::string>& y);

/// One ImbalanceResult per candidate subset against the target, in order.
std::vector<ImbalanceResult> imbalance_plane(
    const AlignedPanel& panel,
    const std::vector<std::vector<std::string>>& candidates,
    const std::vector<std::string>& target);

}  // namespace infoimb
