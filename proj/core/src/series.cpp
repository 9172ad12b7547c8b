#include "infoimb/series.hpp"

#include <cmath>

#include "infoimb/errors.hpp"

namespace infoimb {

TimeSeries TimeSeries::checked(std::string name, std::vector<Date> timestamps,
                               std::vector<double> values,
                               Frequency frequency) {
  if (timestamps.empty()) {
    throw data_error("empty series: '" + name + "'");
  }
  if (timestamps.size() != values.size()) {
    throw data_error("series '" + name + "': " +
                     std::to_string(timestamps.size()) + " timestamps vs " +
                     std::to_string(values.size()) + " values");
  }
  for (size_t i = 1; i < timestamps.size(); ++i) {
    if (timestamps[i] == timestamps[i - 1]) {
      throw data_error("duplicate timestamp " + format_date(timestamps[i]) +
                       " in series '" + name + "'");
    }
    if (timestamps[i] < timestamps[i - 1]) {
      throw data_error("timestamps not increasing at " +
                       format_date(timestamps[i]) + " in series '" + name +
                       "'");
    }
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw data_error("non-finite value at " + format_date(timestamps[i]) +
                       " in series '" + name + "'");
    }
  }
  if (timestamps.size() >= 2) {
    // A frequency matching the inference table is consistent by definition;
    // anything else must sit within +-40% of its nominal period.
    const double med = median_spacing_days(timestamps);
    if (classify_spacing(med) != frequency && !spacing_consistent(med, frequency)) {
      throw data_error("series '" + name + "': declared frequency " +
                       frequency_name(frequency) +
                       " inconsistent with median spacing " +
                       std::to_string(med) + " days");
    }
  }
  TimeSeries out;
  out.name = std::move(name);
  out.timestamps = std::move(timestamps);
  out.values = std::move(values);
  out.frequency = frequency;
  return out;
}

TimeSeries simple_returns(const TimeSeries& series) {
  if (series.size() < 2) {
    throw data_error("returns require at least two observations: '" +
                     series.name + "'");
  }
  std::vector<Date> ts(series.timestamps.begin() + 1, series.timestamps.end());
  std::vector<double> vals;
  vals.reserve(series.size() - 1);
  for (size_t i = 1; i < series.size(); ++i) {
    if (series.values[i - 1] == 0.0) {
      throw data_error("zero value at " + format_date(series.timestamps[i - 1]) +
                       " prevents returns for '" + series.name + "'");
    }
    vals.push_back(series.values[i] / series.values[i - 1] - 1.0);
  }
  return TimeSeries::checked(series.name + "_ret", std::move(ts),
                             std::move(vals), series.frequency);
}

}  // namespace infoimb
