#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infoimb/gp.hpp"
#include "infoimb/greedy.hpp"
#include "infoimb/panel.hpp"

namespace infoimb {

enum class PredictorMode { selected, all, random };

const char* predictor_mode_name(PredictorMode m);

struct ForecastConfig {
  int delta_t = 0;  // 0 = nowcast, 1 = one-period-ahead forecast
  PredictorMode mode = PredictorMode::selected;
  std::size_t k = 3;               // subset size for selected/random
  std::size_t replications = 10;   // random mode
  std::uint64_t seed = 0;          // random mode
  std::size_t cv_folds = 5;
  KernelConfig kernel;             // nu = 1.5 by default
  double sigma_n_sq = 1e-3;
};

struct FoldResult {
  std::size_t index = 0;
  double mse = 0.0;  // on the standardized target
  double length_scale = 0.0;
  std::size_t n_test = 0;
  bool failed = false;
};

struct PathPoint {
  Date date;
  double realized = 0.0;   // standardized target
  double predicted = 0.0;  // held-out posterior mean
  int fold = 0;
};

struct ReplicationResult {
  std::vector<std::string> columns;
  double mse_mean = 0.0;
  std::vector<FoldResult> folds;
};

/// Cross-validated GP forecasting report. MSE is reported on the
/// standardized target so values are comparable across predictor sets.
/// For selected/all the spread is over folds; for random it is over
/// replication means and `path.predicted` is the replication average.
struct ForecastReport {
  PredictorMode mode = PredictorMode::selected;
  int delta_t = 0;
  std::vector<std::string> predictor_columns;  // selected/all modes
  std::vector<FoldResult> folds;               // selected/all modes
  std::vector<ReplicationResult> replications; // random mode
  double mse_mean = 0.0;
  double mse_std = 0.0;
  std::vector<PathPoint> path;  // held-out predictions in time order
};

/// Split rows into cv_folds contiguous time-ordered blocks; for each fold
/// fit a GP on the complement (length scale re-optimized per fit) and score
/// the held-out block. delta_t = 1 pairs predictors at t with the target at
/// t+1 and admits the lagged target into the candidate pool.
ForecastReport run_forecast(const AlignedPanel& panel,
                            const ForecastConfig& config);

/// Same harness with the predictor set taken from an existing greedy trace;
/// produces the plot-ready realized-vs-predicted path.
ForecastReport predict_path(const AlignedPanel& panel,
                            const ForecastConfig& config,
                            const GreedyTrace& trace);

/// Out-of-fold R^2 of a report's stitched path.
double path_r_squared(const ForecastReport& report);

}  // namespace infoimb
