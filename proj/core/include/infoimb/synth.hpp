#pragma once

#include <cstdint>
#include <string>

#include "infoimb/panel.hpp"
#include "infoimb/series.hpp"

namespace infoimb {

/// Synthetic regimes used by the validation suites.
/// Panel regimes (x/y columns on a daily grid):
///   independent_noise:       x, y iid N(0,1)
///   linear_noise:            x ~ N(0,1), y = x + sigma * eps
///   quadratic:               x ~ U(-1,1), y = x^2 + sigma * eps
///   multivariate_sum:        x1, x2 ~ U(0,1), y = x1 + x2
///   informative_plus_noise:  sig_i, noise_j iid N(0,1),
///                            target = sum(sig) / sqrt(d_inf) + sigma * eps
/// Temporal regimes (a single TimeSeries):
///   ar1:                     x_t = phi x_{t-1} + eps_t, stationary start
///   trend_plus_wiggle:       slope * i + amplitude * sin(2 pi i / period)
///                            + sigma * eps_i
enum class Regime {
  independent_noise,
  linear_noise,
  quadratic,
  multivariate_sum,
  ar1,
  trend_plus_wiggle,
  informative_plus_noise,
};

const char* regime_name(Regime r);
Regime parse_regime(const std::string& name);

struct SynthSpec {
  Regime regime = Regime::independent_noise;
  std::size_t n = 1000;  // >= 10
  std::uint64_t seed = 0;
  double sigma = 0.1;  // noise level where the regime uses one
  double phi = 0.9;    // ar1 coefficient, |phi| < 1
  std::size_t d_inf = 3, d_noise = 27;  // informative_plus_noise shape
  double slope = 0.01, amplitude = 1.0, period = 5.0;  // trend_plus_wiggle
  Frequency frequency = Frequency::daily;  // temporal regimes
};

bool is_temporal(Regime r);

/// Generate a panel regime. Columns are drawn one after the other from a
/// single PortableRng(seed) stream, so the output is a pure function of the
/// spec. The calendar is consecutive days from 2014-01-01. Throws for
/// temporal regimes.
AlignedPanel generate_panel(const SynthSpec& spec);

/// Generate a temporal regime on the period-end grid of spec.frequency
/// starting in January 2014. Throws for panel regimes.
TimeSeries generate_series(const SynthSpec& spec);

}  // namespace infoimb
