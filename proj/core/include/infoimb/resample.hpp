#pragma once

#include <string>
#include <vector>

#include "infoimb/panel.hpp"
#include "infoimb/series.hpp"

namespace infoimb {

enum class ResampleMode { impute, aggregate };

/// Observation-noise rule for the resampling GP.
struct NoiseRule {
  enum class Kind { fixed, rolling_variance } kind = Kind::fixed;
  double sigma_sq = 1e-3;  // fixed mode only

  static NoiseRule fixed(double sigma_sq) {
    return {Kind::fixed, sigma_sq};
  }
  static NoiseRule rolling_variance() {
    return {Kind::rolling_variance, 0.0};
  }
};

struct ResampleSpec {
  ResampleMode mode = ResampleMode::impute;
  Frequency target_frequency = Frequency::weekly;
  std::string source_name;
  NoiseRule noise;
};

/// GP resampling engine. Fits a Matern-3/2 GP on (time, value) with the
/// length scale chosen by maximum likelihood, then reads the posterior mean
/// off the target period-end grid. Time is encoded as days since the first
/// observation divided by the median spacing. Output dates never leave the
/// source's [first, last] span.
TimeSeries resample_series(const TimeSeries& series, const ResampleSpec& spec);

/// Refine a coarse series to a strictly finer grid. GP noise fixed at 1e-3,
/// just enough to regularize the solve. Requires length >= 3.
TimeSeries impute(const TimeSeries& series, Frequency target_frequency);

/// Smooth a fine series onto a strictly coarser grid. GP noise is the mean
/// rolling sample variance over one target period (floored at 1e-10), so
/// noisier series get smoothed harder. Requires length >= 2 * window.
TimeSeries aggregate(const TimeSeries& series, Frequency target_frequency);

/// Rolling window length in source steps for one target period.
std::size_t aggregation_window(const TimeSeries& series,
                               Frequency target_frequency);

/// Mean trailing rolling sample variance with the given window, over all
/// full windows, floored at 1e-10.
double mean_rolling_variance(const std::vector<double>& values,
                             std::size_t window);

/// Bring every series to `target_frequency` (finer sources are aggregated,
/// coarser ones imputed, equal ones passed through bit-for-bit), then align.
AlignedPanel resample_panel(const std::vector<TimeSeries>& series,
                            Frequency target_frequency,
                            const std::string& target_name);

}  // namespace infoimb
