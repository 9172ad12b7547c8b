#include "infoimb/freq_scan.hpp"

#include <algorithm>

#include "infoimb/errors.hpp"
#include "infoimb/resample.hpp"

namespace infoimb {

namespace {

/// Forward imbalance the trace attains with at most k variables.
double forward_at(const GreedyTrace& trace, std::size_t k) {
  const std::size_t step = std::min(k, trace.steps.size());
  return trace.steps[step - 1].forward;
}

}  // namespace

ScanReport scan(const std::vector<TimeSeries>& series,
                const std::vector<Frequency>& frequencies,
                const std::vector<int>& lags, const std::string& target,
                std::size_t max_k, double epsilon) {
  if (frequencies.empty()) throw data_error("no frequencies to scan");
  if (lags.empty()) throw data_error("no lags to scan");
  for (int lag : lags) {
    if (lag != 0 && lag != 1) {
      throw data_error("lag must be 0 or 1, got " + std::to_string(lag));
    }
  }
  const bool have_target =
      std::any_of(series.begin(), series.end(),
                  [&](const TimeSeries& s) { return s.name == target; });
  if (!have_target) throw data_error("target series not found: " + target);

  ScanReport report;
  for (const Frequency freq : frequencies) {
    const AlignedPanel panel = resample_panel(series, freq, target);
    for (const int lag : lags) {
      const AlignedPanel shifted =
          lag > 0 ? shift_panel(panel, lag, true) : panel;
      GreedyTrace trace = greedy_select(shifted, shifted.candidate_names(),
                                        {target}, max_k, epsilon);
      report.cells.push_back(ScanCell{freq, lag, std::move(trace)});
    }
  }

  for (const int lag : lags) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, max_k); ++k) {
      const ScanCell* winner = nullptr;
      double best_fwd = 0.0;
      for (const ScanCell& cell : report.cells) {
        if (cell.delta_t != lag || cell.trace.steps.empty()) continue;
        const double fwd = forward_at(cell.trace, k);
        const bool wins =
            winner == nullptr || fwd < best_fwd ||
            (fwd == best_fwd && finer_than(cell.frequency, winner->frequency));
        if (wins) {
          winner = &cell;
          best_fwd = fwd;
        }
      }
      if (winner != nullptr) {
        report.best.push_back(
            BestFrequency{lag, k, winner->frequency, best_fwd});
      }
    }
  }
  return report;
}

}  // namespace infoimb
