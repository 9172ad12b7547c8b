#include "infoimb/greedy.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "detail/parallel.hpp"
#include "infoimb/errors.hpp"

namespace infoimb {

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::max_k: return "max_k";
    case StopReason::relative_gain_below_epsilon:
      return "relative_gain_below_epsilon";
  }
  return "?";
}

std::vector<std::string> GreedyTrace::selected() const {
  std::vector<std::string> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.added_column);
  return out;
}

GreedyTrace greedy_select(const AlignedPanel& panel,
                          const std::vector<std::string>& candidates,
                          const std::vector<std::string>& target,
                          std::size_t max_k, double epsilon) {
  if (candidates.empty()) throw data_error("empty candidate pool");
  if (max_k < 1) throw data_error("max_k must be >= 1");
  for (const auto& c : candidates) panel.index_of(c);  // validate names
  {
    std::unordered_set<std::string> seen;
    for (const auto& c : candidates) {
      if (!seen.insert(c).second) {
        throw data_error("duplicate candidate: " + c);
      }
      if (std::find(target.begin(), target.end(), c) != target.end()) {
        throw data_error("candidate '" + c + "' is a target column");
      }
    }
  }

  GreedyTrace trace;
  trace.candidate_pool = candidates;
  trace.target = target;

  std::vector<std::string> remaining = candidates;
  std::vector<std::string> current;
  double prev_forward = std::numeric_limits<double>::infinity();

  while (trace.steps.size() < max_k) {
    if (remaining.empty()) {
      trace.stop_reason = StopReason::max_k;
      break;
    }
    // Evaluate every single-column extension of the current subset.
    std::vector<ImbalanceResult> results(remaining.size());
    detail::parallel_for(remaining.size(), [&](std::size_t c) {
      std::vector<std::string> subset = current;
      subset.push_back(remaining[c]);
      results[c] = information_imbalance(panel, subset, target);
    });
    std::size_t best = 0;
    for (std::size_t c = 1; c < remaining.size(); ++c) {
      const bool better =
          results[c].forward < results[best].forward ||
          (results[c].forward == results[best].forward &&
           remaining[c] < remaining[best]);
      if (better) best = c;
    }

    const double best_forward = results[best].forward;
    if (!trace.steps.empty()) {
      const double gain = (prev_forward - best_forward) / prev_forward;
      if (gain < epsilon) {
        trace.stop_reason = StopReason::relative_gain_below_epsilon;
        return trace;
      }
    }
    current.push_back(remaining[best]);
    trace.steps.push_back(
        {remaining[best], results[best].forward, results[best].backward});
    prev_forward = best_forward;
    remaining.erase(remaining.begin() + best);
  }
  trace.stop_reason = StopReason::max_k;
  return trace;
}

}  // namespace infoimb
