#pragma once

#include <string>
#include <vector>

#include "infoimb/calendar.hpp"

namespace infoimb {

/// Timestamped scalar observations at a declared native frequency.
/// Invariants (enforced by `checked`): strictly increasing timestamps,
/// finite values, declared frequency within +-40% of the median spacing.
struct TimeSeries {
  std::string name;
  std::vector<Date> timestamps;
  std::vector<double> values;
  Frequency frequency = Frequency::daily;

  std::size_t size() const { return timestamps.size(); }
  Date first_date() const { return timestamps.front(); }
  Date last_date() const { return timestamps.back(); }

  /// Validating factory. Throws data_error on any invariant violation.
  static TimeSeries checked(std::string name, std::vector<Date> timestamps,
                            std::vector<double> values, Frequency frequency);
};

/// Simple returns v[i]/v[i-1] - 1, one observation shorter.
/// Throws data_error if any prior value is zero.
TimeSeries simple_returns(const TimeSeries& series);

}  // namespace infoimb
