#include "infoimb/forecast.hpp"

#include <algorithm>
#include <cmath>

#include "detail/parallel.hpp"
#include "infoimb/errors.hpp"
#include "infoimb/rng.hpp"

namespace infoimb {

const char* predictor_mode_name(PredictorMode m) {
  switch (m) {
    case PredictorMode::selected: return "selected";
    case PredictorMode::all: return "all";
    case PredictorMode::random: return "random";
  }
  return "?";
}

namespace {

struct FoldSpan {
  std::size_t begin, end;  // held-out rows [begin, end)
};

std::vector<FoldSpan> contiguous_folds(std::size_t rows, std::size_t folds) {
  if (folds < 2) throw data_error("cv_folds must be >= 2");
  std::vector<FoldSpan> out;
  out.reserve(folds);
  for (std::size_t f = 0; f < folds; ++f) {
    const std::size_t b = f * rows / folds;
    const std::size_t e = (f + 1) * rows / folds;
    if (e - b < 2) {
      throw data_error("fold " + std::to_string(f) + " has fewer than 2 rows");
    }
    out.push_back({b, e});
  }
  return out;
}

struct CvOutcome {
  std::vector<FoldResult> folds;
  std::vector<PathPoint> path;
  double mse_mean = 0.0;
  double mse_std = 0.0;
};

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / double(v.size());
}

double sample_std(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / double(v.size() - 1));
}

/// One full cross-validation pass over the given predictor columns.
CvOutcome cross_validate(const AlignedPanel& panel,
                         const std::vector<std::string>& columns,
                         const ForecastConfig& config, bool parallel) {
  if (columns.empty()) throw data_error("empty predictor set");
  std::vector<std::size_t> col_idx;
  col_idx.reserve(columns.size());
  for (const auto& c : columns) col_idx.push_back(panel.index_of(c));
  const std::vector<double>& target =
      panel.standardized(panel.target_index());

  const std::size_t n = panel.rows();
  const std::vector<FoldSpan> folds = contiguous_folds(n, config.cv_folds);

  CvOutcome out;
  out.folds.resize(folds.size());
  std::vector<std::vector<PathPoint>> fold_paths(folds.size());

  const auto run_fold = [&](std::size_t f) {
    const FoldSpan span = folds[f];
    const Eigen::Index n_train = Eigen::Index(n - (span.end - span.begin));
    const Eigen::Index n_cols = Eigen::Index(col_idx.size());
    Eigen::MatrixXd inputs(n_train, n_cols);
    Eigen::VectorXd targets(n_train);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= span.begin && i < span.end) continue;
      for (std::size_t c = 0; c < col_idx.size(); ++c) {
        inputs(Eigen::Index(r), Eigen::Index(c)) =
            panel.standardized(col_idx[c])[i];
      }
      targets(Eigen::Index(r)) = target[i];
      ++r;
    }

    FoldResult& result = out.folds[f];
    result.index = f;
    result.n_test = span.end - span.begin;
    try {
      const KernelConfig tuned =
          optimize_length_scale(inputs, targets, config.kernel,
                                config.sigma_n_sq);
      const GPFit model = fit(inputs, targets, tuned, config.sigma_n_sq);
      result.length_scale = tuned.length_scale;

      Eigen::VectorXd query(n_cols);
      double se = 0.0;
      for (std::size_t i = span.begin; i < span.end; ++i) {
        for (std::size_t c = 0; c < col_idx.size(); ++c) {
          query(Eigen::Index(c)) = panel.standardized(col_idx[c])[i];
        }
        const double pred = predict_mean(model, query);
        se += (pred - target[i]) * (pred - target[i]);
        fold_paths[f].push_back(
            PathPoint{panel.grid()[i], target[i], pred, int(f)});
      }
      result.mse = se / double(result.n_test);
    } catch (const numeric_error&) {
      result.failed = true;
    }
  };

  if (parallel) {
    detail::parallel_for(folds.size(), run_fold);
  } else {
    for (std::size_t f = 0; f < folds.size(); ++f) run_fold(f);
  }

  std::vector<double> mses;
  for (const auto& fr : out.folds) {
    if (!fr.failed) mses.push_back(fr.mse);
  }
  if (mses.empty()) {
    throw numeric_error("every cross-validation fold failed to fit");
  }
  out.mse_mean = mean_of(mses);
  out.mse_std = sample_std(mses, out.mse_mean);
  for (auto& fp : fold_paths) {
    out.path.insert(out.path.end(), fp.begin(), fp.end());
  }
  return out;
}

ForecastReport forecast_with_columns(const AlignedPanel& shifted,
                                     const ForecastConfig& config,
                                     const std::vector<std::string>& columns) {
  CvOutcome cv = cross_validate(shifted, columns, config, /*parallel=*/true);
  ForecastReport report;
  report.mode = config.mode;
  report.delta_t = config.delta_t;
  report.predictor_columns = columns;
  report.folds = std::move(cv.folds);
  report.mse_mean = cv.mse_mean;
  report.mse_std = cv.mse_std;
  report.path = std::move(cv.path);
  return report;
}

ForecastReport forecast_random(const AlignedPanel& shifted,
                               const ForecastConfig& config) {
  const std::vector<std::string> pool = shifted.candidate_names();
  if (config.k > pool.size()) {
    throw data_error("random mode: k exceeds the candidate pool");
  }
  if (config.replications < 1) throw data_error("replications must be >= 1");

  // All draws come from one seeded stream so the whole report is a pure
  // function of the seed.
  PortableRng rng(config.seed);
  std::vector<std::vector<std::string>> draws(config.replications);
  for (std::size_t rep = 0; rep < config.replications; ++rep) {
    for (std::size_t idx :
         rng.sample_without_replacement(pool.size(), config.k)) {
      draws[rep].push_back(pool[idx]);
    }
  }

  std::vector<CvOutcome> outcomes(config.replications);
  detail::parallel_for(config.replications, [&](std::size_t rep) {
    outcomes[rep] =
        cross_validate(shifted, draws[rep], config, /*parallel=*/false);
  });

  ForecastReport report;
  report.mode = PredictorMode::random;
  report.delta_t = config.delta_t;
  std::vector<double> rep_means;
  rep_means.reserve(config.replications);
  std::vector<double> pred_sum;
  for (std::size_t rep = 0; rep < config.replications; ++rep) {
    ReplicationResult rr;
    rr.columns = draws[rep];
    rr.mse_mean = outcomes[rep].mse_mean;
    rr.folds = std::move(outcomes[rep].folds);
    rep_means.push_back(rr.mse_mean);
    report.replications.push_back(std::move(rr));
    if (pred_sum.empty()) {
      report.path = outcomes[rep].path;
      pred_sum.resize(report.path.size(), 0.0);
    }
    for (std::size_t i = 0; i < pred_sum.size(); ++i) {
      pred_sum[i] += outcomes[rep].path[i].predicted;
    }
  }
  // Path prediction = average over replications.
  for (std::size_t i = 0; i < report.path.size(); ++i) {
    report.path[i].predicted = pred_sum[i] / double(config.replications);
  }
  report.mse_mean = mean_of(rep_means);
  report.mse_std = sample_std(rep_means, report.mse_mean);
  return report;
}

}  // namespace

ForecastReport run_forecast(const AlignedPanel& panel,
                            const ForecastConfig& config) {
  if (config.delta_t != 0 && config.delta_t != 1) {
    throw data_error("delta_t must be 0 or 1");
  }
  const AlignedPanel shifted = config.delta_t > 0
                                   ? shift_panel(panel, config.delta_t, true)
                                   : panel;
  switch (config.mode) {
    case PredictorMode::all:
      return forecast_with_columns(shifted, config,
                                   shifted.candidate_names());
    case PredictorMode::random:
      return forecast_random(shifted, config);
    case PredictorMode::selected: {
      if (config.k < 1) throw data_error("k must be >= 1");
      const GreedyTrace trace =
          greedy_select(shifted, shifted.candidate_names(),
                        {shifted.target_name()}, config.k, /*epsilon=*/0.0);
      return forecast_with_columns(shifted, config, trace.selected());
    }
  }
  throw data_error("unknown predictor mode");
}

ForecastReport predict_path(const AlignedPanel& panel,
                            const ForecastConfig& config,
                            const GreedyTrace& trace) {
  if (trace.steps.empty()) throw data_error("empty predictor set");
  if (config.delta_t != 0 && config.delta_t != 1) {
    throw data_error("delta_t must be 0 or 1");
  }
  const AlignedPanel shifted = config.delta_t > 0
                                   ? shift_panel(panel, config.delta_t, true)
                                   : panel;
  return forecast_with_columns(shifted, config, trace.selected());
}

double path_r_squared(const ForecastReport& report) {
  if (report.path.empty()) throw data_error("empty path");
  double mean = 0.0;
  for (const auto& p : report.path) mean += p.realized;
  mean /= double(report.path.size());
  double sse = 0.0, sst = 0.0;
  for (const auto& p : report.path) {
    sse += (p.realized - p.predicted) * (p.realized - p.predicted);
    sst += (p.realized - mean) * (p.realized - mean);
  }
  return 1.0 - sse / sst;
}

}  // namespace infoimb
