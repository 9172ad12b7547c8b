#include "infoimb/panel.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "infoimb/errors.hpp"

namespace infoimb {

namespace {

Standardization standardize_in_place(const std::string& name,
                                     std::vector<double>& col) {
  const size_t n = col.size();
  double sum = 0.0;
  for (double v : col) sum += v;
  const double mean = sum / double(n);
  double ss = 0.0;
  for (double v : col) ss += (v - mean) * (v - mean);
  if (n < 2 || ss == 0.0) {
    throw data_error("zero variance: " + name);
  }
  const double sd = std::sqrt(ss / double(n - 1));
  for (double& v : col) v = (v - mean) / sd;
  return Standardization{mean, sd};
}

}  // namespace

AlignedPanel AlignedPanel::from_raw(std::vector<Date> grid,
                                    std::vector<std::string> names,
                                    std::vector<std::vector<double>> columns,
                                    std::string target_name) {
  if (grid.empty()) throw data_error("empty panel grid");
  if (names.size() != columns.size()) {
    throw data_error("panel: name/column count mismatch");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw data_error("duplicate column name: " + n);
    }
  }
  AlignedPanel p;
  p.grid_ = std::move(grid);
  p.names_ = std::move(names);
  p.columns_ = std::move(columns);
  p.target_name_ = std::move(target_name);
  p.standardization_.reserve(p.columns_.size());
  for (size_t c = 0; c < p.columns_.size(); ++c) {
    if (p.columns_[c].size() != p.grid_.size()) {
      throw data_error("column '" + p.names_[c] + "' has " +
                       std::to_string(p.columns_[c].size()) + " rows, grid " +
                       std::to_string(p.grid_.size()));
    }
    p.standardization_.push_back(standardize_in_place(p.names_[c], p.columns_[c]));
  }
  const auto it = std::find(p.names_.begin(), p.names_.end(), p.target_name_);
  if (it == p.names_.end()) {
    throw data_error("target column not in panel: " + p.target_name_);
  }
  p.target_index_ = size_t(it - p.names_.begin());
  return p;
}

bool AlignedPanel::has_column(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t AlignedPanel::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw data_error("unknown column: " + name);
  return size_t(it - names_.begin());
}

std::vector<double> AlignedPanel::original(std::size_t col) const {
  std::vector<double> out = columns_[col];
  const auto& s = standardization_[col];
  for (double& v : out) v = v * s.std + s.mean;
  return out;
}

std::vector<std::string> AlignedPanel::candidate_names() const {
  std::vector<std::string> out;
  out.reserve(names_.size() - 1);
  for (const auto& n : names_) {
    if (n != target_name_) out.push_back(n);
  }
  return out;
}

AlignedPanel shift_panel(const AlignedPanel& panel, int delta_t,
                         bool add_lagged_target) {
  if (delta_t < 0) throw data_error("negative lag");
  const size_t n = panel.rows();
  if (size_t(delta_t) >= n) throw data_error("lag exceeds panel length");
  const size_t m = n - size_t(delta_t);

  std::vector<Date> grid(panel.grid().begin() + delta_t, panel.grid().end());
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;

  const size_t ti = panel.target_index();
  for (size_t c = 0; c < panel.cols(); ++c) {
    const std::vector<double> orig = panel.original(c);
    if (c == ti) {
      // Target at t + delta_t.
      names.push_back(panel.names()[c]);
      cols.emplace_back(orig.begin() + delta_t, orig.end());
    } else {
      // Predictors at t.
      names.push_back(panel.names()[c]);
      cols.emplace_back(orig.begin(), orig.begin() + m);
    }
  }
  if (add_lagged_target && delta_t > 0) {
    const std::vector<double> orig = panel.original(ti);
    names.push_back(panel.target_name() + "_lag" + std::to_string(delta_t));
    cols.emplace_back(orig.begin(), orig.begin() + m);
  }
  return AlignedPanel::from_raw(std::move(grid), std::move(names),
                                std::move(cols), panel.target_name());
}

}  // namespace infoimb
