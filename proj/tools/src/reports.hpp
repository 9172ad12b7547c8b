#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "infoimb/forecast.hpp"
#include "infoimb/freq_scan.hpp"
#include "infoimb/greedy.hpp"
#include "infoimb/imbalance.hpp"
#include "infoimb/ingest.hpp"

namespace infoimb::cli {

using json = nlohmann::ordered_json;

json plane_to_json(const std::vector<ImbalanceResult>& plane);
json trace_to_json(const GreedyTrace& trace);
json scan_to_json(const ScanReport& report);
json forecast_to_json(const ForecastReport& report);
json describe_to_json(const std::vector<ColumnSummary>& summaries);

std::string plane_to_csv(const std::vector<ImbalanceResult>& plane);
std::string trace_to_csv(const GreedyTrace& trace);
std::string scan_to_csv(const ScanReport& report);
std::string paths_to_csv(const ForecastReport& report);
std::string describe_to_csv(const std::vector<ColumnSummary>& summaries);

}  // namespace infoimb::cli
