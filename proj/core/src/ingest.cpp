#include "infoimb/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "infoimb/errors.hpp"

namespace infoimb {

namespace {

std::string trim(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_cell(const std::string& cell, const std::string& path,
                  size_t row, const std::string& column) {
  double v = 0.0;
  const char* b = cell.data();
  const char* e = b + cell.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || ptr != e || !std::isfinite(v)) {
    throw data_error(path + ":" + std::to_string(row) +
                     ": non-numeric cell '" + cell + "' in column '" + column +
                     "'");
  }
  return v;
}

std::string csv_double(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

std::vector<TimeSeries> load_csv(const std::string& path,
                                 const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw data_error(path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  // Strip a UTF-8 BOM if present.
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    line.erase(0, 3);
  }
  const std::vector<std::string> header = split_csv_line(line);
  if (header.size() < 2 || header[0] != "date") {
    throw data_error(path + ":1: header must start with 'date' and name at "
                     "least one value column");
  }

  const size_t ncols = header.size() - 1;
  struct Row {
    Date date;
    std::vector<std::optional<double>> cells;
    size_t line_no;
  };
  std::vector<Row> rows;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw data_error(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(header.size()) + " cells, got " +
                       std::to_string(cells.size()));
    }
    Row row;
    try {
      row.date = parse_date(cells[0]);
    } catch (const data_error& e) {
      throw data_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    row.line_no = line_no;
    row.cells.resize(ncols);
    for (size_t c = 0; c < ncols; ++c) {
      const std::string& cell = cells[c + 1];
      if (cell.empty()) {
        if (!options.allow_missing) {
          throw data_error(path + ":" + std::to_string(line_no) +
                           ": missing value in column '" + header[c + 1] +
                           "' (pass the permissive flag to accept gaps)");
        }
        continue;
      }
      row.cells[c] = parse_cell(cell, path, line_no, header[c + 1]);
    }
    rows.push_back(std::move(row));
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.date < b.date; });
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].date == rows[i - 1].date) {
      throw data_error(path + ":" + std::to_string(rows[i].line_no) +
                       ": duplicate timestamp " + format_date(rows[i].date));
    }
  }

  std::vector<TimeSeries> out;
  out.reserve(ncols);
  for (size_t c = 0; c < ncols; ++c) {
    std::vector<Date> ts;
    std::vector<double> vals;
    for (const Row& row : rows) {
      if (row.cells[c]) {
        ts.push_back(row.date);
        vals.push_back(*row.cells[c]);
      }
    }
    if (ts.empty()) {
      throw data_error(path + ": column '" + header[c + 1] +
                       "' has no observations");
    }
    Frequency freq;
    if (options.declared_frequency) {
      freq = *options.declared_frequency;
    } else if (ts.size() >= 2) {
      freq = classify_spacing(median_spacing_days(ts));
    } else {
      throw data_error(path + ": column '" + header[c + 1] +
                       "' has a single observation; frequency cannot be "
                       "inferred");
    }
    out.push_back(TimeSeries::checked(header[c + 1], std::move(ts),
                                      std::move(vals), freq));
  }
  return out;
}

std::vector<TimeSeries> load_panel(const std::vector<std::string>& paths,
                                   const IngestOptions& options) {
  std::vector<TimeSeries> all;
  std::unordered_set<std::string> seen;
  for (const auto& path : paths) {
    for (auto& s : load_csv(path, options)) {
      if (!seen.insert(s.name).second) {
        throw data_error("duplicate column name across files: " + s.name);
      }
      all.push_back(std::move(s));
    }
  }
  return all;
}

AlignedPanel align(const std::vector<TimeSeries>& series,
                   Frequency grid_frequency, const std::string& target_name) {
  if (series.empty()) throw data_error("no series to align");
  for (const auto& s : series) {
    if (s.frequency != grid_frequency) {
      throw data_error("series '" + s.name + "' is " +
                       frequency_name(s.frequency) + ", expected " +
                       frequency_name(grid_frequency) +
                       " (resample it first)");
    }
  }
  // Intersection of date sets, in calendar order.
  std::vector<Date> grid(series[0].timestamps);
  for (size_t i = 1; i < series.size(); ++i) {
    std::vector<Date> next;
    std::set_intersection(grid.begin(), grid.end(),
                          series[i].timestamps.begin(),
                          series[i].timestamps.end(),
                          std::back_inserter(next));
    grid = std::move(next);
  }
  if (grid.empty()) throw data_error("empty intersection of series dates");

  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;
  for (const auto& s : series) {
    std::vector<double> col;
    col.reserve(grid.size());
    size_t j = 0;
    for (const Date& d : grid) {
      while (s.timestamps[j] < d) ++j;
      col.push_back(s.values[j]);
    }
    names.push_back(s.name);
    cols.push_back(std::move(col));
  }
  return AlignedPanel::from_raw(std::move(grid), std::move(names),
                                std::move(cols), target_name);
}

namespace {

double interpolated_quantile(const std::vector<double>& sorted, double p) {
  const size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = p * double(n - 1);
  const size_t lo = size_t(std::floor(h));
  if (lo + 1 >= n) return sorted[n - 1];
  return sorted[lo] + (h - double(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

std::vector<ColumnSummary> describe(const AlignedPanel& panel) {
  std::vector<ColumnSummary> out;
  out.reserve(panel.cols());
  for (size_t c = 0; c < panel.cols(); ++c) {
    const std::vector<double> v = panel.original(c);
    const double n = double(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    const double sd = v.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    std::vector<double> sorted(v);
    std::sort(sorted.begin(), sorted.end());
    out.push_back(ColumnSummary{panel.names()[c], mean, sd, sorted.front(),
                                interpolated_quantile(sorted, 0.25),
                                interpolated_quantile(sorted, 0.50),
                                interpolated_quantile(sorted, 0.75),
                                sorted.back()});
  }
  return out;
}

double pearson(const AlignedPanel& panel, const std::string& a,
               const std::string& b) {
  const auto& x = panel.standardized(panel.index_of(a));
  const auto& y = panel.standardized(panel.index_of(b));
  const double n = double(x.size());
  double sx = 0, sy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

void write_series_csv(const std::string& path,
                      const std::vector<TimeSeries>& series) {
  if (series.empty()) throw data_error("nothing to write");
  std::map<Date, std::vector<std::optional<double>>> table;
  for (size_t c = 0; c < series.size(); ++c) {
    for (size_t i = 0; i < series[c].size(); ++i) {
      auto& row = table[series[c].timestamps[i]];
      row.resize(series.size());
      row[c] = series[c].values[i];
    }
  }
  std::ofstream out(path);
  if (!out) throw data_error("cannot write file: " + path);
  out << "date";
  for (const auto& s : series) out << "," << s.name;
  out << "\n";
  for (const auto& [date, row] : table) {
    out << format_date(date);
    for (size_t c = 0; c < series.size(); ++c) {
      out << ",";
      if (c < row.size() && row[c]) out << csv_double(*row[c]);
    }
    out << "\n";
  }
}

void write_panel_csv(const std::string& path, const AlignedPanel& panel) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write file: " + path);
  out << "date";
  for (const auto& n : panel.names()) out << "," << n;
  out << "\n";
  std::vector<std::vector<double>> orig;
  orig.reserve(panel.cols());
  for (size_t c = 0; c < panel.cols(); ++c) orig.push_back(panel.original(c));
  for (size_t i = 0; i < panel.rows(); ++i) {
    out << format_date(panel.grid()[i]);
    for (size_t c = 0; c < panel.cols(); ++c) out << "," << csv_double(orig[c][i]);
    out << "\n";
  }
}

}  // namespace infoimb
