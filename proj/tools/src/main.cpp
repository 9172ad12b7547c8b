#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "infoimb/errors.hpp"

namespace {

using infoimb::cli::Invocation;

void add_io(CLI::App* cmd, Invocation& inv, bool needs_input = true) {
  if (needs_input) {
    cmd->add_option("--input", inv.inputs, "Input CSV file(s)")->required();
    cmd->add_flag("--permissive", inv.permissive,
                  "Accept empty cells as missing observations");
  }
  cmd->add_option("--out", inv.out, "Output file")->required();
  cmd->add_option("--format", inv.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Rank-based predictor analysis and GP forecasting for "
      "mixed-frequency time-series panels"};
  app.require_subcommand(1);

  Invocation inv;
  inv.argv.assign(argv + 1, argv + argc);

  auto* synth = app.add_subcommand("synth", "Write a synthetic CSV panel");
  synth->add_option("--regime", inv.regime, "Generator regime")->required();
  synth->add_option("--n", inv.n, "Number of rows");
  synth->add_option("--seed", inv.seed, "RNG seed");
  synth->add_option("--sigma", inv.sigma, "Noise level");
  synth->add_option("--phi", inv.phi, "AR(1) coefficient");
  synth->add_option("--d-inf", inv.d_inf, "Informative column count");
  synth->add_option("--d-noise", inv.d_noise, "Noise column count");
  synth->add_option("--slope", inv.slope, "Trend slope per step");
  synth->add_option("--amplitude", inv.amplitude, "Wiggle amplitude");
  synth->add_option("--period", inv.period, "Wiggle period in steps");
  synth->add_option("--frequency", inv.frequency, "Temporal regime grid");
  add_io(synth, inv, /*needs_input=*/false);

  auto* resample = app.add_subcommand(
      "resample", "GP-resample series to a target frequency (CSV out)");
  resample->add_option("--frequency", inv.frequency, "Target frequency")
      ->required();
  resample->add_option("--mode", inv.resample_mode,
                       "impute, aggregate or auto")
      ->check(CLI::IsMember({"impute", "aggregate", "auto"}));
  add_io(resample, inv);

  auto* plane = app.add_subcommand(
      "plane", "Pairwise imbalance plane of every candidate vs the target");
  plane->add_option("--target", inv.target, "Target column")->required();
  plane->add_option("--frequency", inv.frequency,
                    "Grid frequency (default: the target's)");
  plane
      ->add_option("--delta-t", inv.delta_t,
                   "Predict target delta-t periods ahead")
      ->check(CLI::Range(0, 1));
  add_io(plane, inv);

  auto* select = app.add_subcommand(
      "select", "Greedy forward selection of the most informative subset");
  select->add_option("--target", inv.target, "Target column")->required();
  select->add_option("--frequency", inv.frequency,
                     "Grid frequency (default: the target's)");
  select->add_option("--delta-t", inv.delta_t, "Lag in grid periods")
      ->check(CLI::Range(0, 1));
  select->add_option("--max-k", inv.max_k, "Maximum subset size");
  select->add_option("--epsilon", inv.epsilon,
                     "Relative-gain stopping threshold");
  add_io(select, inv);

  auto* scan = app.add_subcommand(
      "scan", "Greedy selection across frequencies and lags");
  scan->add_option("--target", inv.target, "Target column")->required();
  scan->add_option("--frequencies", inv.frequencies, "Frequencies to scan")
      ->required()
      ->delimiter(',');
  scan->add_option("--lags", inv.lags, "Lags (0 and/or 1)")->delimiter(',');
  scan->add_option("--max-k", inv.max_k, "Maximum subset size");
  scan->add_option("--epsilon", inv.epsilon,
                   "Relative-gain stopping threshold");
  add_io(scan, inv);

  auto* forecast = app.add_subcommand(
      "forecast", "Cross-validated GP nowcast/forecast report");
  forecast->add_option("--target", inv.target, "Target column")->required();
  forecast->add_option("--frequency", inv.frequency,
                       "Grid frequency (default: the target's)");
  forecast->add_option("--delta-t", inv.delta_t, "0 = nowcast, 1 = forecast")
      ->check(CLI::Range(0, 1));
  forecast->add_option("--mode", inv.mode, "selected, all or random")
      ->check(CLI::IsMember({"selected", "all", "random"}));
  forecast->add_option("--k", inv.k, "Predictor count (selected/random)");
  forecast->add_option("--replications", inv.replications,
                       "Random-mode replications");
  forecast->add_option("--seed", inv.seed, "Random-mode seed");
  forecast->add_option("--folds", inv.cv_folds, "Cross-validation folds");
  forecast->add_option("--noise", inv.sigma_n_sq, "GP noise variance");
  add_io(forecast, inv);

  auto* describe =
      app.add_subcommand("describe", "Per-column descriptive statistics");
  describe->add_option("--target", inv.target, "Target column (optional)");
  describe->add_option("--frequency", inv.frequency, "Grid frequency");
  describe->add_flag("--returns", inv.use_returns,
                     "Analyze simple returns instead of levels");
  add_io(describe, inv);

  auto* corr = app.add_subcommand(
      "corr", "Pearson correlation of every candidate against the target");
  corr->add_option("--target", inv.target, "Target column")->required();
  corr->add_option("--frequency", inv.frequency, "Grid frequency");
  corr->add_flag("--returns", inv.use_returns,
                 "Correlate simple returns instead of levels");
  add_io(corr, inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (synth->parsed()) infoimb::cli::cmd_synth(inv);
    if (resample->parsed()) infoimb::cli::cmd_resample(inv);
    if (plane->parsed()) infoimb::cli::cmd_plane(inv);
    if (select->parsed()) infoimb::cli::cmd_select(inv);
    if (scan->parsed()) infoimb::cli::cmd_scan(inv);
    if (forecast->parsed()) infoimb::cli::cmd_forecast(inv);
    if (describe->parsed()) infoimb::cli::cmd_describe(inv);
    if (corr->parsed()) infoimb::cli::cmd_corr(inv);
  } catch (const infoimb::data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const infoimb::numeric_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
