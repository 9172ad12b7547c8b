#pragma once

#include <string>
#include <vector>

#include "infoimb/calendar.hpp"

namespace infoimb {

/// Per-column z-scoring parameters, recorded on the original scale.
struct Standardization {
  double mean = 0.0;
  double std = 1.0;  // sample std, N-1 denominator
};

/// N x D matrix of standardized variable columns on a shared time grid.
/// Columns are stored z-scored; `standardization` recovers original units.
class AlignedPanel {
 public:
  /// Build from original-scale columns; z-scores each column.
  /// Throws data_error on length mismatch, zero-variance columns, unknown
  /// target, duplicate names, or an empty grid.
  static AlignedPanel from_raw(std::vector<Date> grid,
                               std::vector<std::string> names,
                               std::vector<std::vector<double>> columns,
                               std::string target_name);

  std::size_t rows() const { return grid_.size(); }
  std::size_t cols() const { return names_.size(); }

  const std::vector<Date>& grid() const { return grid_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& target_name() const { return target_name_; }
  std::size_t target_index() const { return target_index_; }

  bool has_column(const std::string& name) const;
  /// Throws data_error for unknown names.
  std::size_t index_of(const std::string& name) const;

  /// Standardized column (mean ~0, std ~1).
  const std::vector<double>& standardized(std::size_t col) const {
    return columns_[col];
  }
  const Standardization& scaling(std::size_t col) const {
    return standardization_[col];
  }

  /// Column mapped back to original units.
  std::vector<double> original(std::size_t col) const;

  /// Names of every non-target column, in panel order.
  std::vector<std::string> candidate_names() const;

 private:
  std::vector<Date> grid_;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
  std::vector<Standardization> standardization_;
  std::string target_name_;
  std::size_t target_index_ = 0;
};

/// Pair predictor rows t with target rows t+delta_t and drop the tail rows
/// that have no partner. With add_lagged_target, the target's own value at
/// time t enters the result as an extra candidate column named
/// "<target>_lag<delta_t>". delta_t = 0 returns a re-standardized copy.
/// Columns are rebuilt from original units and z-scored on the shifted rows.
AlignedPanel shift_panel(const AlignedPanel& panel, int delta_t,
                         bool add_lagged_target);

}  // namespace infoimb
