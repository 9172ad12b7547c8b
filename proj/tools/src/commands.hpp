#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace infoimb::cli {

/// Everything a subcommand needs, collected by the argument parser.
/// `argv` is the raw command line recorded in the manifest.
struct Invocation {
  std::vector<std::string> argv;
  std::vector<std::string> inputs;
  std::string target;
  std::optional<std::string> frequency;  // grid frequency name
  std::vector<std::string> frequencies;  // scan
  std::vector<int> lags = {0};           // scan
  int delta_t = 0;
  std::size_t max_k = 10;
  double epsilon = 0.01;
  std::string mode = "selected";         // forecast: selected|all|random
  std::string resample_mode = "auto";    // resample: impute|aggregate|auto
  std::size_t k = 3;
  std::size_t replications = 10;
  std::size_t cv_folds = 5;
  double sigma_n_sq = 1e-3;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  bool permissive = false;
  bool use_returns = false;
  // synth parameters
  std::string regime = "independent_noise";
  std::size_t n = 1000;
  double sigma = 0.1;
  double phi = 0.9;
  std::size_t d_inf = 3, d_noise = 27;
  double slope = 0.01, amplitude = 1.0, period = 5.0;
};

void cmd_synth(const Invocation& inv);
void cmd_resample(const Invocation& inv);
void cmd_plane(const Invocation& inv);
void cmd_select(const Invocation& inv);
void cmd_scan(const Invocation& inv);
void cmd_forecast(const Invocation& inv);
void cmd_describe(const Invocation& inv);
void cmd_corr(const Invocation& inv);

}  // namespace infoimb::cli
