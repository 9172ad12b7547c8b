#include "infoimb/imbalance.hpp"

#include <algorithm>
#include <numeric>

#include "infoimb/errors.hpp"

namespace infoimb {

double pair_distance_sq(const std::vector<const std::vector<double>*>& cols,
                        std::size_t i, std::size_t j) {
  double acc = 0.0;
  for (const auto* col : cols) {
    const double d = (*col)[i] - (*col)[j];
    acc += d * d;
  }
  return acc;
}

std::vector<const std::vector<double>*> resolve_columns(
    const AlignedPanel& panel, const std::vector<std::string>& columns) {
  if (columns.empty()) throw data_error("empty column subset");
  std::vector<const std::vector<double>*> out;
  out.reserve(columns.size());
  for (const auto& name : columns) {
    out.push_back(&panel.standardized(panel.index_of(name)));
  }
  return out;
}

namespace {

void require_min_points(std::size_t n) {
  if (n < 3) {
    throw data_error("imbalance requires at least 3 points, got " +
                     std::to_string(n));
  }
}

void fill_row_distances(const std::vector<const std::vector<double>*>& cols,
                        std::size_t n, std::size_t i,
                        std::vector<double>& out) {
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = (j == i) ? 0.0 : pair_distance_sq(cols, i, j);
  }
}

struct NearestNeighbor {
  std::size_t index;
  bool tied;
};

NearestNeighbor nearest_in_row(const std::vector<double>& dist, std::size_t n,
                               std::size_t i) {
  std::size_t best = (i == 0) ? 1 : 0;
  bool tied = false;
  for (std::size_t j = best + 1; j < n; ++j) {
    if (j == i) continue;
    if (dist[j] < dist[best]) {
      best = j;
      tied = false;
    } else if (dist[j] == dist[best]) {
      tied = true;  // lower index already kept
    }
  }
  return {best, tied};
}

/// Rank of j in the ascending (distance, index) ordering around i.
long rank_in_row(const std::vector<double>& dist, std::size_t n, std::size_t i,
                 std::size_t j) {
  const double dj = dist[j];
  long before = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    if (dist[k] < dj || (dist[k] == dj && k < j)) ++before;
  }
  return before + 1;
}

}  // namespace

RankMatrix rank_matrix(const AlignedPanel& panel,
                       const std::vector<std::string>& columns) {
  const auto cols = resolve_columns(panel, columns);
  const std::size_t n = panel.rows();
  require_min_points(n);

  RankMatrix rm;
  rm.n = n;
  rm.neighbor_order.resize(n);
  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[j] = (j == i) ? 0.0 : pair_distance_sq(cols, i, j);
    }
    std::vector<int>& row = rm.neighbor_order[i];
    row.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row.push_back(int(j));
    }
    std::sort(row.begin(), row.end(), [&dist](int a, int b) {
      return dist[a] < dist[b] || (dist[a] == dist[b] && a < b);
    });
    if (row.size() >= 2 && dist[row[0]] == dist[row[1]]) ++rm.tied_nn_rows;
  }
  return rm;
}

ImbalanceResult information_imbalance(const AlignedPanel& panel,
                                      const std::vector<std::string>& x,
                                      const std::vector<std::string>& y) {
  const auto xcols = resolve_columns(panel, x);
  const auto ycols = resolve_columns(panel, y);
  const std::size_t n = panel.rows();
  require_min_points(n);

  long fwd_rank_sum = 0;
  long bwd_rank_sum = 0;
  std::size_t tied_x = 0;
  std::size_t tied_y = 0;
  std::vector<double> dx(n), dy(n);
  for (std::size_t i = 0; i < n; ++i) {
    fill_row_distances(xcols, n, i, dx);
    fill_row_distances(ycols, n, i, dy);
    const NearestNeighbor nx = nearest_in_row(dx, n, i);
    const NearestNeighbor ny = nearest_in_row(dy, n, i);
    if (nx.tied) ++tied_x;
    if (ny.tied) ++tied_y;
    fwd_rank_sum += rank_in_row(dy, n, i, nx.index);
    bwd_rank_sum += rank_in_row(dx, n, i, ny.index);
  }

  ImbalanceResult r;
  r.n = n;
  r.x_columns = x;
  r.y_columns = y;
  r.forward = 2.0 * double(fwd_rank_sum) / (double(n) * double(n));
  r.backward = 2.0 * double(bwd_rank_sum) / (double(n) * double(n));
  r.tie_fraction = double(std::max(tied_x, tied_y)) / double(n);
  return r;
}

std::vector<ImbalanceResult> imbalance_plane(
    const AlignedPanel& panel,
    const std::vector<std::vector<std::string>>& candidates,
    const std::vector<std::string>& target) {
  std::vector<ImbalanceResult> out;
  out.reserve(candidates.size());
  for (const auto& subset : candidates) {
    out.push_back(information_imbalance(panel, subset, target));
  }
  return out;
}

}  // namespace infoimb
