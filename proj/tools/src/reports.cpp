#include "reports.hpp"

#include <charconv>
#include <sstream>

namespace infoimb::cli {

namespace {

std::string csv_num(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string join(const std::vector<std::string>& parts, char sep = '+') {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

json plane_to_json(const std::vector<ImbalanceResult>& plane) {
  json arr = json::array();
  for (const auto& r : plane) {
    arr.push_back({{"x_columns", r.x_columns},
                   {"forward", r.forward},
                   {"backward", r.backward},
                   {"n", r.n}});
  }
  return arr;
}

std::string plane_to_csv(const std::vector<ImbalanceResult>& plane) {
  std::ostringstream out;
  out << "columns,forward,backward,n\n";
  for (const auto& r : plane) {
    out << join(r.x_columns) << "," << csv_num(r.forward) << ","
        << csv_num(r.backward) << "," << r.n << "\n";
  }
  return out.str();
}

json trace_to_json(const GreedyTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"column", s.added_column},
                     {"forward", s.forward},
                     {"backward", s.backward}});
  }
  return json{{"target", trace.target},
              {"candidate_pool", trace.candidate_pool},
              {"steps", steps},
              {"stop_reason", stop_reason_name(trace.stop_reason)}};
}

std::string trace_to_csv(const GreedyTrace& trace) {
  std::ostringstream out;
  out << "step,column,forward,backward\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    out << (i + 1) << "," << s.added_column << "," << csv_num(s.forward)
        << "," << csv_num(s.backward) << "\n";
  }
  return out.str();
}

json scan_to_json(const ScanReport& report) {
  json cells = json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"frequency", frequency_name(c.frequency)},
                     {"delta_t", c.delta_t},
                     {"trace", trace_to_json(c.trace)}});
  }
  json best = json::array();
  for (const auto& b : report.best) {
    best.push_back({{"delta_t", b.delta_t},
                    {"k", b.k},
                    {"frequency", frequency_name(b.frequency)},
                    {"forward", b.forward}});
  }
  return json{{"cells", cells}, {"best_frequency", best}};
}

std::string scan_to_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "frequency,delta_t,step,column,forward,backward\n";
  for (const auto& c : report.cells) {
    for (std::size_t i = 0; i < c.trace.steps.size(); ++i) {
      const auto& s = c.trace.steps[i];
      out << frequency_name(c.frequency) << "," << c.delta_t << "," << (i + 1)
          << "," << s.added_column << "," << csv_num(s.forward) << ","
          << csv_num(s.backward) << "\n";
    }
  }
  return out.str();
}

json forecast_to_json(const ForecastReport& report) {
  json j;
  j["mode"] = predictor_mode_name(report.mode);
  j["delta_t"] = report.delta_t;
  j["mse_mean"] = report.mse_mean;
  j["mse_std"] = report.mse_std;
  if (!report.predictor_columns.empty()) {
    j["predictors"] = report.predictor_columns;
  }
  if (!report.folds.empty()) {
    json folds = json::array();
    for (const auto& f : report.folds) {
      folds.push_back({{"fold", f.index},
                       {"mse", f.mse},
                       {"length_scale", f.length_scale},
                       {"n_test", f.n_test},
                       {"failed", f.failed}});
    }
    j["folds"] = folds;
  }
  if (!report.replications.empty()) {
    json reps = json::array();
    for (const auto& r : report.replications) {
      reps.push_back({{"columns", r.columns}, {"mse_mean", r.mse_mean}});
    }
    j["replications"] = reps;
  }
  return j;
}

std::string paths_to_csv(const ForecastReport& report) {
  std::ostringstream out;
  out << "date,realized,predicted,fold\n";
  for (const auto& p : report.path) {
    out << format_date(p.date) << "," << csv_num(p.realized) << ","
        << csv_num(p.predicted) << "," << p.fold << "\n";
  }
  return out.str();
}

json describe_to_json(const std::vector<ColumnSummary>& summaries) {
  json arr = json::array();
  for (const auto& s : summaries) {
    arr.push_back({{"name", s.name},
                   {"mean", s.mean},
                   {"std", s.std},
                   {"min", s.min},
                   {"q25", s.q25},
                   {"median", s.median},
                   {"q75", s.q75},
                   {"max", s.max}});
  }
  return arr;
}

std::string describe_to_csv(const std::vector<ColumnSummary>& summaries) {
  std::ostringstream out;
  out << "name,mean,std,min,q25,median,q75,max\n";
  for (const auto& s : summaries) {
    out << s.name << "," << csv_num(s.mean) << "," << csv_num(s.std) << ","
        << csv_num(s.min) << "," << csv_num(s.q25) << "," << csv_num(s.median)
        << "," << csv_num(s.q75) << "," << csv_num(s.max) << "\n";
  }
  return out.str();
}

}  // namespace infoimb::cli
