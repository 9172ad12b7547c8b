#pragma once

#include <string>
#include <vector>

#include "infoimb/imbalance.hpp"
#include "infoimb/panel.hpp"

namespace infoimb {

enum class StopReason { max_k, relative_gain_below_epsilon };

const char* stop_reason_name(StopReason r);

struct GreedyStep {
  std::string added_column;
  double forward = 0.0;   // D(selected -> target) after the add
  double backward = 0.0;  // D(target -> selected) after the add
};

/// Full record of a forward greedy selection run. The forward value at each
/// step is exactly what information_imbalance returns for the cumulative
/// subset, so every step can be re-checked independently.
struct GreedyTrace {
  std::vector<GreedyStep> steps;
  std::vector<std::string> candidate_pool;
  std::vector<std::string> target;
  StopReason stop_reason = StopReason::max_k;

  std::vector<std::string> selected() const;
};

/// Forward greedy selection: at each step append the candidate minimizing
/// the cumulative forward imbalance, ties broken by ascending column name.
/// Stops after max_k steps, or before appending a step whose relative gain
/// (prev - best) / prev falls below epsilon. The first step is always taken.
GreedyTrace greedy_select(const AlignedPanel& panel,
                          const std::vector<std::string>& candidates,
                          const std::vector<std::string>& target,
                          std::size_t max_k = 10, double epsilon = 0.01);

}  // namespace infoimb
