#include "infoimb/resample.hpp"

#include <cmath>

#include "detail/parallel.hpp"
#include "infoimb/errors.hpp"
#include "infoimb/gp.hpp"
#include "infoimb/ingest.hpp"

namespace infoimb {

std::size_t aggregation_window(const TimeSeries& series,
                               Frequency target_frequency) {
  const double med = median_spacing_days(series.timestamps);
  const double steps = nominal_period_days(target_frequency) / med;
  return std::max<std::size_t>(2, std::size_t(std::lround(steps)));
}

double mean_rolling_variance(const std::vector<double>& values,
                             std::size_t window) {
  if (window < 2 || window > values.size()) {
    throw data_error("rolling window " + std::to_string(window) +
                     " invalid for series of length " +
                     std::to_string(values.size()));
  }
  double acc = 0.0;
  std::size_t count = 0;
  for (std::size_t t = window - 1; t < values.size(); ++t) {
    double mean = 0.0;
    for (std::size_t j = t + 1 - window; j <= t; ++j) mean += values[j];
    mean /= double(window);
    double ss = 0.0;
    for (std::size_t j = t + 1 - window; j <= t; ++j) {
      ss += (values[j] - mean) * (values[j] - mean);
    }
    acc += ss / double(window - 1);
    ++count;
  }
  const double var = acc / double(count);
  return std::max(var, 1e-10);
}

TimeSeries resample_series(const TimeSeries& series,
                           const ResampleSpec& spec) {
  const Frequency target = spec.target_frequency;
  if (spec.mode == ResampleMode::impute) {
    if (!finer_than(target, series.frequency)) {
      throw data_error("impute requires a target finer than " +
                       std::string(frequency_name(series.frequency)) +
                       " for '" + series.name + "'");
    }
    if (series.size() < 3) {
      throw data_error("impute requires at least 3 observations: '" +
                       series.name + "'");
    }
  } else {
    if (!finer_than(series.frequency, target)) {
      throw data_error("aggregate requires a target coarser than " +
                       std::string(frequency_name(series.frequency)) +
                       " for '" + series.name + "'");
    }
  }

  double sigma_sq = spec.noise.sigma_sq;
  if (spec.noise.kind == NoiseRule::Kind::rolling_variance) {
    const std::size_t window = aggregation_window(series, target);
    if (series.size() < 2 * window) {
      throw data_error("series '" + series.name + "' too short (" +
                       std::to_string(series.size()) + ") for a " +
                       std::to_string(window) + "-step rolling window");
    }
    sigma_sq = mean_rolling_variance(series.values, window);
  }

  // Time axis: days since the first observation, in units of the median
  // spacing, so the length-scale search bounds transfer across frequencies.
  const double med = median_spacing_days(series.timestamps);
  const Date origin = series.first_date();
  const Eigen::Index m = Eigen::Index(series.size());
  Eigen::MatrixXd inputs(m, 1);
  Eigen::VectorXd targets(m);
  for (std::size_t i = 0; i < series.size(); ++i) {
    inputs(Eigen::Index(i), 0) =
        double((series.timestamps[i] - origin).count()) / med;
    targets(Eigen::Index(i)) = series.values[i];
  }

  KernelConfig base;  // nu = 1.5
  const KernelConfig tuned =
      optimize_length_scale(inputs, targets, base, sigma_sq);
  const GPFit model = fit(inputs, targets, tuned, sigma_sq);

  const std::vector<Date> grid =
      period_end_grid(target, series.first_date(), series.last_date());
  if (grid.empty()) {
    throw data_error("no " + std::string(frequency_name(target)) +
                     " period ends inside the span of '" + series.name + "'");
  }
  std::vector<double> out_values(grid.size());
  Eigen::VectorXd query(1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    query(0) = double((grid[i] - origin).count()) / med;
    out_values[i] = predict_mean(model, query);
  }
  return TimeSeries::checked(series.name, grid, std::move(out_values), target);
}

TimeSeries impute(const TimeSeries& series, Frequency target_frequency) {
  ResampleSpec spec;
  spec.mode = ResampleMode::impute;
  spec.target_frequency = target_frequency;
  spec.source_name = series.name;
  spec.noise = NoiseRule::fixed(1e-3);
  return resample_series(series, spec);
}

TimeSeries aggregate(const TimeSeries& series, Frequency target_frequency) {
  ResampleSpec spec;
  spec.mode = ResampleMode::aggregate;
  spec.target_frequency = target_frequency;
  spec.source_name = series.name;
  spec.noise = NoiseRule::rolling_variance();
  return resample_series(series, spec);
}

AlignedPanel resample_panel(const std::vector<TimeSeries>& series,
                            Frequency target_frequency,
                            const std::string& target_name) {
  if (series.empty()) throw data_error("no series to resample");
  std::vector<TimeSeries> resampled(series.size());
  detail::parallel_for(series.size(), [&](std::size_t i) {
    const TimeSeries& s = series[i];
    if (s.frequency == target_frequency) {
      resampled[i] = s;
    } else if (finer_than(s.frequency, target_frequency)) {
      resampled[i] = aggregate(s, target_frequency);
    } else {
      resampled[i] = impute(s, target_frequency);
    }
  });
  return align(resampled, target_frequency, target_name);
}

}  // namespace infoimb
