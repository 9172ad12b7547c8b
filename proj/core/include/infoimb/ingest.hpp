#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infoimb/panel.hpp"
#include "infoimb/series.hpp"

namespace infoimb {

struct IngestOptions {
  /// Frequency to assign to every loaded column; inferred from the median
  /// timestamp spacing when unset.
  std::optional<Frequency> declared_frequency;
  /// Accept empty cells as absent observations. Off by default: resampling,
  /// not silent gaps, is the sanctioned path for incomplete series.
  bool allow_missing = false;
};

/// Load one CSV conforming to the contract: header row, first column `date`
/// in ISO-8601, remaining columns numeric with '.' decimal separator, UTF-8.
/// Returns one TimeSeries per value column. Throws data_error naming the
/// file and row on malformed dates, non-numeric cells, duplicate timestamps
/// or empty series.
std::vector<TimeSeries> load_csv(const std::string& path,
                                 const IngestOptions& options = {});

/// Load several CSVs; column names must be unique across all files.
std::vector<TimeSeries> load_panel(const std::vector<std::string>& paths,
                                   const IngestOptions& options = {});

/// Restrict all series to the intersection of their date sets and z-score
/// each column. Every series must already be at `grid_frequency`.
/// Throws data_error on frequency mismatch, empty intersection or
/// zero-variance columns.
AlignedPanel align(const std::vector<TimeSeries>& series,
                   Frequency grid_frequency, const std::string& target_name);

/// Per-column summary on the original (de-standardized) scale.
struct ColumnSummary {
  std::string name;
  double mean, std, min, q25, median, q75, max;
};

/// Quantiles use linear interpolation between order statistics.
std::vector<ColumnSummary> describe(const AlignedPanel& panel);

/// Sample Pearson correlation between two columns; symmetric, in [-1, 1].
double pearson(const AlignedPanel& panel, const std::string& a,
               const std::string& b);

/// Write series sharing one calendar to the standard CSV contract.
/// Dates are the union of all series' dates; absent observations are
/// emitted as empty cells.
void write_series_csv(const std::string& path,
                      const std::vector<TimeSeries>& series);

/// Write a panel on the original scale to the standard CSV contract.
void write_panel_csv(const std::string& path, const AlignedPanel& panel);

}  // namespace infoimb
