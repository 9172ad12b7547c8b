#include "infoimb/synth.hpp"

#include <cmath>

#include "infoimb/errors.hpp"
#include "infoimb/rng.hpp"

namespace infoimb {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::independent_noise: return "independent_noise";
    case Regime::linear_noise: return "linear_noise";
    case Regime::quadratic: return "quadratic";
    case Regime::multivariate_sum: return "multivariate_sum";
    case Regime::ar1: return "ar1";
    case Regime::trend_plus_wiggle: return "trend_plus_wiggle";
    case Regime::informative_plus_noise: return "informative_plus_noise";
  }
  return "?";
}

Regime parse_regime(const std::string& name) {
  for (const Regime r :
       {Regime::independent_noise, Regime::linear_noise, Regime::quadratic,
        Regime::multivariate_sum, Regime::ar1, Regime::trend_plus_wiggle,
        Regime::informative_plus_noise}) {
    if (name == regime_name(r)) return r;
  }
  throw data_error("unknown regime: '" + name + "'");
}

bool is_temporal(Regime r) {
  return r == Regime::ar1 || r == Regime::trend_plus_wiggle;
}

namespace {

void check_spec(const SynthSpec& spec) {
  if (spec.n < 10) throw data_error("synthetic n must be >= 10");
  if (spec.sigma < 0.0) throw data_error("negative sigma");
  if (spec.regime == Regime::ar1 && !(std::abs(spec.phi) < 1.0)) {
    throw data_error("ar1 requires |phi| < 1");
  }
  if (spec.regime == Regime::informative_plus_noise && spec.d_inf < 1) {
    throw data_error("informative_plus_noise requires d_inf >= 1");
  }
  if (spec.regime == Regime::trend_plus_wiggle && !(spec.period > 0.0)) {
    throw data_error("trend_plus_wiggle requires a positive period");
  }
}

std::vector<Date> daily_grid(std::size_t n) {
  std::vector<Date> grid;
  grid.reserve(n);
  Date d = parse_date("2014-01-01");
  for (std::size_t i = 0; i < n; ++i, d += std::chrono::days{1}) {
    grid.push_back(d);
  }
  return grid;
}

std::vector<Date> temporal_grid(Frequency f, std::size_t n) {
  std::vector<Date> grid;
  grid.reserve(n);
  switch (f) {
    case Frequency::daily:
      return daily_grid(n);
    case Frequency::weekly:
    case Frequency::biweekly: {
      Date d = parse_date("2014-01-03");  // a Friday
      const auto step =
          std::chrono::days{f == Frequency::weekly ? 7 : 14};
      for (std::size_t i = 0; i < n; ++i, d += step) grid.push_back(d);
      return grid;
    }
    case Frequency::monthly: {
      Date d = parse_date("2014-01-31");
      for (std::size_t i = 0; i < n; ++i) {
        grid.push_back(d);
        d = month_end(d + std::chrono::days{1});
      }
      return grid;
    }
    case Frequency::quarterly: {
      Date d = parse_date("2014-03-31");
      for (std::size_t i = 0; i < n; ++i) {
        grid.push_back(d);
        d = quarter_end(d + std::chrono::days{1});
      }
      return grid;
    }
  }
  return grid;
}

std::vector<double> draw_normal(PortableRng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.normal();
  return v;
}

}  // namespace

AlignedPanel generate_panel(const SynthSpec& spec) {
  check_spec(spec);
  if (is_temporal(spec.regime)) {
    throw data_error(std::string(regime_name(spec.regime)) +
                     " is a temporal regime; use generate_series");
  }
  PortableRng rng(spec.seed);
  const std::size_t n = spec.n;
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;
  std::string target;

  switch (spec.regime) {
    case Regime::independent_noise: {
      names = {"x", "y"};
      cols.push_back(draw_normal(rng, n));
      cols.push_back(draw_normal(rng, n));
      target = "y";
      break;
    }
    case Regime::linear_noise: {
      std::vector<double> x = draw_normal(rng, n);
      std::vector<double> y(n);
      for (std::size_t i = 0; i < n; ++i) {
        y[i] = x[i] + spec.sigma * rng.normal();
      }
      names = {"x", "y"};
      cols = {std::move(x), std::move(y)};
      target = "y";
      break;
    }
    case Regime::quadratic: {
      std::vector<double> x(n), y(n);
      for (double& v : x) v = rng.uniform(-1.0, 1.0);
      for (std::size_t i = 0; i < n; ++i) {
        y[i] = x[i] * x[i] + spec.sigma * rng.normal();
      }
      names = {"x", "y"};
      cols = {std::move(x), std::move(y)};
      target = "y";
      break;
    }
    case Regime::multivariate_sum: {
      std::vector<double> x1(n), x2(n), y(n);
      for (double& v : x1) v = rng.uniform();
      for (double& v : x2) v = rng.uniform();
      for (std::size_t i = 0; i < n; ++i) y[i] = x1[i] + x2[i];
      names = {"x1", "x2", "y"};
      cols = {std::move(x1), std::move(x2), std::move(y)};
      target = "y";
      break;
    }
    case Regime::informative_plus_noise: {
      for (std::size_t c = 0; c < spec.d_inf; ++c) {
        names.push_back("sig" + std::to_string(c + 1));
        cols.push_back(draw_normal(rng, n));
      }
      for (std::size_t c = 0; c < spec.d_noise; ++c) {
        names.push_back("noise" + std::to_string(c + 1));
        cols.push_back(draw_normal(rng, n));
      }
      std::vector<double> y(n, 0.0);
      const double scale = 1.0 / std::sqrt(double(spec.d_inf));
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t c = 0; c < spec.d_inf; ++c) s += cols[c][i];
        y[i] = s * scale + spec.sigma * rng.normal();
      }
      names.push_back("target");
      cols.push_back(std::move(y));
      target = "target";
      break;
    }
    default:
      throw data_error("unhandled regime");
  }
  return AlignedPanel::from_raw(daily_grid(n), std::move(names),
                                std::move(cols), target);
}

TimeSeries generate_series(const SynthSpec& spec) {
  check_spec(spec);
  if (!is_temporal(spec.regime)) {
    throw data_error(std::string(regime_name(spec.regime)) +
                     " is a panel regime; use generate_panel");
  }
  PortableRng rng(spec.seed);
  const std::size_t n = spec.n;
  std::vector<double> v(n);
  if (spec.regime == Regime::ar1) {
    v[0] = rng.normal() / std::sqrt(1.0 - spec.phi * spec.phi);
    for (std::size_t i = 1; i < n; ++i) {
      v[i] = spec.phi * v[i - 1] + rng.normal();
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = spec.slope * double(i) +
             spec.amplitude * std::sin(2.0 * M_PI * double(i) / spec.period) +
             spec.sigma * rng.normal();
    }
  }
  return TimeSeries::checked(regime_name(spec.regime),
                             temporal_grid(spec.frequency, n), std::move(v),
                             spec.frequency);
}

}  // namespace infoimb
