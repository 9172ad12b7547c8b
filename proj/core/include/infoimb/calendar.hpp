#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace infoimb {

/// Calendar day, no time-of-day component.
using Date = std::chrono::sys_days;

enum class Frequency { daily, weekly, biweekly, monthly, quarterly };

/// Parse "YYYY-MM-DD". Throws data_error on malformed input or invalid dates.
Date parse_date(const std::string& text);

/// Format as "YYYY-MM-DD".
std::string format_date(Date d);

const char* frequency_name(Frequency f);

/// Parse a frequency name ("daily", "weekly", ...). Throws data_error.
Frequency parse_frequency(const std::string& name);

/// Nominal period length in days (30.44 for monthly, 91.31 for quarterly).
double nominal_period_days(Frequency f);

/// True if `a` has a strictly shorter period than `b`.
bool finer_than(Frequency a, Frequency b);

/// Median spacing between consecutive timestamps, in days.
/// Requires at least two timestamps.
double median_spacing_days(const std::vector<Date>& timestamps);

/// Classify a median spacing into a frequency:
/// <=1.6d daily, <=9d weekly, <=18d biweekly, <=45d monthly, else quarterly.
Frequency classify_spacing(double median_days);

/// True if the median spacing is within +-40% of the frequency's nominal period.
bool spacing_consistent(double median_days, Frequency f);

/// Friday of the ISO week containing `d` (ISO weeks run Monday..Sunday).
Date iso_week_friday(Date d);

/// Last calendar day of the month containing `d`.
Date month_end(Date d);

/// Last calendar day of the quarter containing `d`.
Date quarter_end(Date d);

/// All period-end dates of frequency `f` inside [first, last]:
/// every day for daily, ISO-week Fridays for weekly, every second ISO-week
/// Friday (anchored on the first complete week in range) for biweekly,
/// calendar month ends for monthly, quarter ends for quarterly.
std::vector<Date> period_end_grid(Frequency f, Date first, Date last);

}  // namespace infoimb
