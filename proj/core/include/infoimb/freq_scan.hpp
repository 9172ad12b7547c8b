#pragma once

#include <string>
#include <vector>

#include "infoimb/greedy.hpp"
#include "infoimb/series.hpp"

namespace infoimb {

struct ScanCell {
  Frequency frequency;
  int delta_t = 0;
  GreedyTrace trace;
};

struct BestFrequency {
  int delta_t = 0;
  std::size_t k = 1;  // subset size
  Frequency frequency;
  double forward = 0.0;
};

/// Greedy selection run at every (frequency, lag) combination.
struct ScanReport {
  std::vector<ScanCell> cells;
  /// Winning frequency per lag at subset sizes 1..3 (capped at max_k);
  /// ties go to the finer frequency.
  std::vector<BestFrequency> best;
};

/// Resample the panel to each candidate frequency, pair predictors at t with
/// the target at t + delta_t, and run greedy selection per cell. For
/// delta_t = 1 the target's own lagged value joins the candidate pool as
/// "<target>_lag1"; at delta_t = 0 it stays out.
ScanReport scan(const std::vector<TimeSeries>& series,
                const std::vector<Frequency>& frequencies,
                const std::vector<int>& lags, const std::string& target,
                std::size_t max_k = 3, double epsilon = 0.01);

}  // namespace infoimb
