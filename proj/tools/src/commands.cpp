#include "commands.hpp"

#include <fstream>
#include <iostream>

#include "infoimb/errors.hpp"
#include "infoimb/resample.hpp"
#include "infoimb/synth.hpp"
#include "manifest.hpp"
#include "reports.hpp"

namespace infoimb::cli {

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write file: " + path);
  out << text;
}

void write_json_report(const std::string& path, const RunManifest& manifest,
                       json result) {
  json envelope;
  envelope["manifest"] = to_json(manifest);
  envelope["result"] = std::move(result);
  write_text(path, envelope.dump(2) + "\n");
}

std::vector<TimeSeries> load_inputs(const Invocation& inv) {
  if (inv.inputs.empty()) throw data_error("no --input files given");
  IngestOptions opts;
  opts.allow_missing = inv.permissive;
  std::vector<TimeSeries> series = load_panel(inv.inputs, opts);
  if (inv.use_returns) {
    for (auto& s : series) s = simple_returns(s);
  }
  return series;
}

/// Grid frequency: the --frequency flag, or the target's native frequency.
Frequency grid_frequency(const Invocation& inv,
                         const std::vector<TimeSeries>& series) {
  if (inv.frequency) return parse_frequency(*inv.frequency);
  for (const auto& s : series) {
    if (s.name == inv.target) return s.frequency;
  }
  throw data_error("target series not found: " + inv.target);
}

AlignedPanel build_panel(const Invocation& inv,
                         const std::vector<TimeSeries>& series) {
  if (inv.target.empty()) throw data_error("--target is required");
  return resample_panel(series, grid_frequency(inv, series), inv.target);
}

void warn_on_ties(const std::vector<ImbalanceResult>& results) {
  for (const auto& r : results) {
    if (r.tie_fraction > 0.01) {
      std::cerr << "warning: " << (r.tie_fraction * 100.0)
                << "% of rows have tied nearest neighbors under {";
      for (const auto& c : r.x_columns) std::cerr << c << " ";
      std::cerr << "}; results depend on the tie policy\n";
    }
  }
}

}  // namespace

void cmd_synth(const Invocation& inv) {
  SynthSpec spec;
  spec.regime = parse_regime(inv.regime);
  spec.n = inv.n;
  spec.seed = inv.seed;
  spec.sigma = inv.sigma;
  spec.phi = inv.phi;
  spec.d_inf = inv.d_inf;
  spec.d_noise = inv.d_noise;
  spec.slope = inv.slope;
  spec.amplitude = inv.amplitude;
  spec.period = inv.period;
  if (inv.frequency) spec.frequency = parse_frequency(*inv.frequency);

  if (is_temporal(spec.regime)) {
    write_series_csv(inv.out, {generate_series(spec)});
  } else {
    write_panel_csv(inv.out, generate_panel(spec));
  }
  RunManifest m = make_manifest("synth", inv.argv, {});
  m.seed = inv.seed;
  m.has_seed = true;
  write_sidecar(inv.out, m);
}

void cmd_resample(const Invocation& inv) {
  const std::vector<TimeSeries> series = load_inputs(inv);
  if (!inv.frequency) throw data_error("--frequency is required");
  const Frequency target = parse_frequency(*inv.frequency);

  std::vector<TimeSeries> resampled;
  resampled.reserve(series.size());
  for (const auto& s : series) {
    if (inv.resample_mode == "impute") {
      resampled.push_back(impute(s, target));
    } else if (inv.resample_mode == "aggregate") {
      resampled.push_back(aggregate(s, target));
    } else if (inv.resample_mode == "auto") {
      if (s.frequency == target) {
        resampled.push_back(s);
      } else if (finer_than(s.frequency, target)) {
        resampled.push_back(aggregate(s, target));
      } else {
        resampled.push_back(impute(s, target));
      }
    } else {
      throw data_error("unknown resample mode: " + inv.resample_mode);
    }
  }
  write_series_csv(inv.out, resampled);
  write_sidecar(inv.out, make_manifest("resample", inv.argv, inv.inputs));
}

void cmd_plane(const Invocation& inv) {
  const std::vector<TimeSeries> series = load_inputs(inv);
  AlignedPanel panel = build_panel(inv, series);
  if (inv.delta_t > 0) panel = shift_panel(panel, inv.delta_t, true);
  if (panel.cols() < 2) throw data_error("panel has no candidate columns");

  std::vector<std::vector<std::string>> candidates;
  for (const auto& name : panel.candidate_names()) candidates.push_back({name});
  const std::vector<ImbalanceResult> plane =
      imbalance_plane(panel, candidates, {inv.target});
  warn_on_ties(plane);

  RunManifest m = make_manifest("plane", inv.argv, inv.inputs);
  if (inv.format == "csv") {
    write_text(inv.out, plane_to_csv(plane));
    write_sidecar(inv.out, m);
  } else {
    write_json_report(inv.out, m, plane_to_json(plane));
  }
}

void cmd_select(const Invocation& inv) {
  const std::vector<TimeSeries> series = load_inputs(inv);
  AlignedPanel panel = build_panel(inv, series);
  if (inv.delta_t > 0) panel = shift_panel(panel, inv.delta_t, true);
  const GreedyTrace trace =
      greedy_select(panel, panel.candidate_names(), {inv.target}, inv.max_k,
                    inv.epsilon);

  RunManifest m = make_manifest("select", inv.argv, inv.inputs);
  if (inv.format == "csv") {
    write_text(inv.out, trace_to_csv(trace));
    write_sidecar(inv.out, m);
  } else {
    write_json_report(inv.out, m, trace_to_json(trace));
  }
}

void cmd_scan(const Invocation& inv) {
  const std::vector<TimeSeries> series = load_inputs(inv);
  if (inv.target.empty()) throw data_error("--target is required");
  std::vector<Frequency> freqs;
  for (const auto& f : inv.frequencies) freqs.push_back(parse_frequency(f));
  if (freqs.empty()) throw data_error("--frequencies is required");

  const ScanReport report =
      scan(series, freqs, inv.lags, inv.target, inv.max_k, inv.epsilon);

  RunManifest m = make_manifest("scan", inv.argv, inv.inputs);
  if (inv.format == "csv") {
    write_text(inv.out, scan_to_csv(report));
    write_sidecar(inv.out, m);
  } else {
    write_json_report(inv.out, m, scan_to_json(report));
  }
}

void cmd_forecast(const Invocation& inv) {
  const std::vector<TimeSeries> series = load_inputs(inv);
  const AlignedPanel panel = build_panel(inv, series);

  ForecastConfig config;
  config.delta_t = inv.delta_t;
  if (inv.mode == "selected") {
    config.mode = PredictorMode::selected;
  } else if (inv.mode == "all") {
    config.mode = PredictorMode::all;
  } else if (inv.mode == "random") {
    config.mode = PredictorMode::random;
  } else {
    throw data_error("unknown mode: " + inv.mode);
  }
  config.k = inv.k;
  config.replications = inv.replications;
  config.seed = inv.seed;
  config.cv_folds = inv.cv_folds;
  config.sigma_n_sq = inv.sigma_n_sq;

  const ForecastReport report = run_forecast(panel, config);

  RunManifest m = make_manifest("forecast", inv.argv, inv.inputs);
  m.seed = inv.seed;
  m.has_seed = true;
  write_json_report(inv.out, m, forecast_to_json(report));

  // Plot-ready held-out path next to the report.
  std::string paths_file = inv.out;
  const auto dot = paths_file.rfind('.');
  if (dot != std::string::npos) paths_file.resize(dot);
  paths_file += ".paths.csv";
  write_text(paths_file, paths_to_csv(report));
}

void cmd_describe(const Invocation& inv) {
  std::vector<TimeSeries> series = load_inputs(inv);
  Invocation local = inv;
  if (local.target.empty()) local.target = series.front().name;
  const AlignedPanel panel = build_panel(local, series);
  const std::vector<ColumnSummary> stats = describe(panel);

  RunManifest m = make_manifest("describe", inv.argv, inv.inputs);
  if (inv.format == "csv") {
    write_text(inv.out, describe_to_csv(stats));
    write_sidecar(inv.out, m);
  } else {
    write_json_report(inv.out, m, describe_to_json(stats));
  }
}

void cmd_corr(const Invocation& inv) {
  const std::vector<TimeSeries> series = load_inputs(inv);
  const AlignedPanel panel = build_panel(inv, series);

  json arr = json::array();
  std::string csv = "column,pearson\n";
  for (const auto& name : panel.candidate_names()) {
    const double rho = pearson(panel, name, inv.target);
    arr.push_back({{"column", name}, {"pearson", rho}});
    csv += name + "," + std::to_string(rho) + "\n";
  }

  RunManifest m = make_manifest("corr", inv.argv, inv.inputs);
  if (inv.format == "csv") {
    write_text(inv.out, csv);
    write_sidecar(inv.out, m);
  } else {
    write_json_report(inv.out, m, arr);
  }
}

}  // namespace infoimb::cli
