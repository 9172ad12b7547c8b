#include "infoimb/calendar.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "infoimb/errors.hpp"

namespace infoimb {

namespace {

int parse_int_field(const std::string& text, size_t pos, size_t len) {
  int out = 0;
  const char* begin = text.data() + pos;
  auto [ptr, ec] = std::from_chars(begin, begin + len, out);
  if (ec != std::errc{} || ptr != begin + len) {
    throw data_error("malformed date: '" + text + "'");
  }
  return out;
}

}  // namespace

Date parse_date(const std::string& text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    throw data_error("malformed date: '" + text + "' (expected YYYY-MM-DD)");
  }
  const int y = parse_int_field(text, 0, 4);
  const int m = parse_int_field(text, 5, 2);
  const int d = parse_int_field(text, 8, 2);
  const std::chrono::year_month_day ymd{std::chrono::year{y},
                                        std::chrono::month{unsigned(m)},
                                        std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) {
    throw data_error("invalid calendar date: '" + text + "'");
  }
  return Date{ymd};
}

std::string format_date(Date d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()));
  return buf;
}

const char* frequency_name(Frequency f) {
  switch (f) {
    case Frequency::daily: return "daily";
    case Frequency::weekly: return "weekly";
    case Frequency::biweekly: return "biweekly";
    case Frequency::monthly: return "monthly";
    case Frequency::quarterly: return "quarterly";
  }
  return "?";
}

Frequency parse_frequency(const std::string& name) {
  if (name == "daily") return Frequency::daily;
  if (name == "weekly") return Frequency::weekly;
  if (name == "biweekly") return Frequency::biweekly;
  if (name == "monthly") return Frequency::monthly;
  if (name == "quarterly") return Frequency::quarterly;
  throw data_error("unknown frequency: '" + name + "'");
}

double nominal_period_days(Frequency f) {
  switch (f) {
    case Frequency::daily: return 1.0;
    case Frequency::weekly: return 7.0;
    case Frequency::biweekly: return 14.0;
    case Frequency::monthly: return 30.44;
    case Frequency::quarterly: return 91.31;
  }
  return 0.0;
}

bool finer_than(Frequency a, Frequency b) {
  return nominal_period_days(a) < nominal_period_days(b);
}

double median_spacing_days(const std::vector<Date>& timestamps) {
  if (timestamps.size() < 2) {
    throw data_error("median spacing undefined for fewer than two timestamps");
  }
  std::vector<double> gaps;
  gaps.reserve(timestamps.size() - 1);
  for (size_t i = 1; i < timestamps.size(); ++i) {
    gaps.push_back(double((timestamps[i] - timestamps[i - 1]).count()));
  }
  std::sort(gaps.begin(), gaps.end());
  const size_t n = gaps.size();
  return (n % 2 == 1) ? gaps[n / 2] : 0.5 * (gaps[n / 2 - 1] + gaps[n / 2]);
}

Frequency classify_spacing(double median_days) {
  if (median_days <= 1.6) return Frequency::daily;
  if (median_days <= 9.0) return Frequency::weekly;
  if (median_days <= 18.0) return Frequency::biweekly;
  if (median_days <= 45.0) return Frequency::monthly;
  return Frequency::quarterly;
}

bool spacing_consistent(double median_days, Frequency f) {
  const double nominal = nominal_period_days(f);
  return median_days >= 0.6 * nominal && median_days <= 1.4 * nominal;
}

Date iso_week_friday(Date d) {
  const std::chrono::weekday wd{d};
  // Days since the ISO week's Monday: Mon=0 .. Sun=6.
  const unsigned since_monday = (wd.c_encoding() + 6) % 7;
  return d - std::chrono::days{since_monday} + std::chrono::days{4};
}

Date month_end(Date d) {
  const std::chrono::year_month_day ymd{d};
  const std::chrono::year_month_day_last eom{ymd.year(),
                                             ymd.month() / std::chrono::last};
  return Date{eom};
}

Date quarter_end(Date d) {
  const std::chrono::year_month_day ymd{d};
  const unsigned m = unsigned(ymd.month());
  const unsigned qm = ((m - 1) / 3) * 3 + 3;  // 3, 6, 9 or 12
  const std::chrono::year_month_day_last eoq{
      ymd.year(), std::chrono::month{qm} / std::chrono::last};
  return Date{eoq};
}

std::vector<Date> period_end_grid(Frequency f, Date first, Date last) {
  std::vector<Date> grid;
  if (first > last) return grid;
  switch (f) {
    case Frequency::daily: {
      for (Date d = first; d <= last; d += std::chrono::days{1}) {
        grid.push_back(d);
      }
      break;
    }
    case Frequency::weekly: {
      Date fri = iso_week_friday(first);
      if (fri < first) fri += std::chrono::days{7};
      for (; fri <= last; fri += std::chrono::days{7}) grid.push_back(fri);
      break;
    }
    case Frequency::biweekly: {
      // Anchor on the first ISO week whose Monday is in range.
      Date fri = iso_week_friday(first);
      if (fri - std::chrono::days{4} < first) fri += std::chrono::days{7};
      for (; fri <= last; fri += std::chrono::days{14}) grid.push_back(fri);
      break;
    }
    case Frequency::monthly: {
      Date eom = month_end(first);
      while (eom <= last) {
        if (eom >= first) grid.push_back(eom);
        eom = month_end(eom + std::chrono::days{1});
      }
      break;
    }
    case Frequency::quarterly: {
      Date eoq = quarter_end(first);
      while (eoq <= last) {
        if (eoq >= first) grid.push_back(eoq);
        eoq = quarter_end(eoq + std::chrono::days{1});
      }
      break;
    }
  }
  return grid;
}

}  // namespace infoimb
