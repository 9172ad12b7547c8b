#include "infoimb/gp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "infoimb/errors.hpp"

namespace infoimb {

namespace {

constexpr double kNoiseFloor = 1e-10;
constexpr std::size_t kMleGridPoints = 64;
constexpr std::size_t kMleMaxRows = 320;

void check_kernel(const KernelConfig& config) {
  if (!(config.length_scale > 0.0)) {
    throw data_error("length scale must be positive");
  }
  if (config.nu != 0.5 && config.nu != 1.5 && config.nu != 2.5) {
    throw data_error("unsupported Matern smoothness nu=" +
                     std::to_string(config.nu) + " (use 0.5, 1.5 or 2.5)");
  }
}

Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& a) {
  const Eigen::Index m = a.rows();
  Eigen::MatrixXd d(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    d(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const double r = (a.row(i) - a.row(j)).norm();
      d(i, j) = r;
      d(j, i) = r;
    }
  }
  return d;
}

Eigen::MatrixXd kernel_from_distances(const Eigen::MatrixXd& dist,
                                      const KernelConfig& config) {
  const double l = config.length_scale;
  if (config.nu == 0.5) {
    return (-dist.array() / l).exp();
  }
  if (config.nu == 1.5) {
    const auto t = std::sqrt(3.0) * dist.array() / l;
    return (1.0 + t) * (-t).exp();
  }
  const auto t = std::sqrt(5.0) * dist.array() / l;
  return (1.0 + t + (5.0 / 3.0) * (dist.array() / l).square()) * (-t).exp();
}

struct Factorization {
  Eigen::MatrixXd lower;
  double noise;  // what actually sits on the diagonal
};

/// Cholesky of K + noise I with jitter escalation.
Factorization factorize(const Eigen::MatrixXd& kernel_matrix, double noise) {
  const double base = noise == 0.0 ? kNoiseFloor : noise;
  for (const double jitter : {0.0, 1e-10, 1e-8, 1e-6}) {
    Eigen::MatrixXd a = kernel_matrix;
    a.diagonal().array() += base + jitter;
    const Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() == Eigen::Success) {
      return {Eigen::MatrixXd(llt.matrixL()), base + jitter};
    }
  }
  throw numeric_error("kernel matrix not positive definite after jitter "
                      "escalation to 1e-6");
}

struct TargetScaling {
  double mean;
  double std;
};

TargetScaling target_scaling(const Eigen::VectorXd& targets) {
  const double mean = targets.mean();
  if (targets.size() < 2) return {mean, 1.0};
  const double ss = (targets.array() - mean).square().sum();
  const double sd = std::sqrt(ss / double(targets.size() - 1));
  return {mean, sd > 0.0 ? sd : 1.0};
}

double lml_from_factorization(const Factorization& f,
                              const Eigen::VectorXd& y) {
  const Eigen::VectorXd alpha =
      f.lower.transpose().triangularView<Eigen::Upper>().solve(
          f.lower.triangularView<Eigen::Lower>().solve(y));
  const double log_det_half = f.lower.diagonal().array().log().sum();
  return -0.5 * y.dot(alpha) - log_det_half -
         0.5 * double(y.size()) * std::log(2.0 * M_PI);
}

}  // namespace

double matern_value(double distance, const KernelConfig& config) {
  check_kernel(config);
  const double l = config.length_scale;
  if (config.nu == 0.5) return std::exp(-distance / l);
  if (config.nu == 1.5) {
    const double t = std::sqrt(3.0) * distance / l;
    return (1.0 + t) * std::exp(-t);
  }
  const double t = std::sqrt(5.0) * distance / l;
  return (1.0 + t + (5.0 / 3.0) * (distance / l) * (distance / l)) *
         std::exp(-t);
}

double matern_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& x2,
                     const KernelConfig& config) {
  if (x.size() != x2.size()) {
    throw data_error("kernel arguments have different dimensions");
  }
  return matern_value((x - x2).norm(), config);
}

namespace {

GPFit finish_fit(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& targets,
                 const KernelConfig& config, Factorization f) {
  const TargetScaling scaling = target_scaling(targets);
  const Eigen::VectorXd y = (targets.array() - scaling.mean) / scaling.std;

  GPFit out;
  out.train_inputs = inputs;
  out.alpha = f.lower.transpose().triangularView<Eigen::Upper>().solve(
      f.lower.triangularView<Eigen::Lower>().solve(y));
  out.chol_lower = std::move(f.lower);
  out.kernel = config;
  out.effective_noise = f.noise;
  out.target_mean = scaling.mean;
  out.target_std = scaling.std;
  return out;
}

void check_fit_args(const Eigen::MatrixXd& inputs,
                    const Eigen::VectorXd& targets,
                    const KernelConfig& config) {
  check_kernel(config);
  if (inputs.rows() != targets.size()) {
    throw data_error("inputs/targets size mismatch");
  }
  if (inputs.rows() < 1) throw data_error("cannot fit on an empty dataset");
}

}  // namespace

GPFit fit(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& targets,
          const KernelConfig& config, double sigma_n_sq) {
  check_fit_args(inputs, targets, config);
  if (sigma_n_sq < 0.0) throw data_error("negative noise variance");
  const Eigen::MatrixXd dist = pairwise_distances(inputs);
  const Eigen::MatrixXd k = kernel_from_distances(dist, config);
  return finish_fit(inputs, targets, config, factorize(k, sigma_n_sq));
}

GPFit fit(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& targets,
          const KernelConfig& config, const Eigen::VectorXd& sigma_n_sq) {
  check_fit_args(inputs, targets, config);
  if (sigma_n_sq.size() != inputs.rows()) {
    throw data_error("per-point noise vector length mismatch");
  }
  if (sigma_n_sq.minCoeff() < 0.0) {
    throw data_error("negative noise variance");
  }
  const Eigen::MatrixXd dist = pairwise_distances(inputs);
  const Eigen::MatrixXd k = kernel_from_distances(dist, config);
  const Eigen::VectorXd floored = sigma_n_sq.cwiseMax(kNoiseFloor);
  for (const double jitter : {0.0, 1e-10, 1e-8, 1e-6}) {
    Eigen::MatrixXd a = k;
    a.diagonal() += floored;
    a.diagonal().array() += jitter;
    const Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() == Eigen::Success) {
      return finish_fit(inputs, targets, config,
                        {Eigen::MatrixXd(llt.matrixL()),
                         floored.minCoeff() + jitter});
    }
  }
  throw numeric_error("kernel matrix not positive definite after jitter "
                      "escalation to 1e-6");
}

namespace {

Eigen::VectorXd cross_kernel(const GPFit& fit, const Eigen::VectorXd& query) {
  if (query.size() != fit.train_inputs.cols()) {
    throw data_error("query dimension mismatch: got " +
                     std::to_string(query.size()) + ", trained on " +
                     std::to_string(fit.train_inputs.cols()));
  }
  const Eigen::Index m = fit.train_inputs.rows();
  Eigen::VectorXd ks(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    ks(i) = matern_value((fit.train_inputs.row(i).transpose() - query).norm(),
                         fit.kernel);
  }
  return ks;
}

}  // namespace

double predict_mean(const GPFit& fit, const Eigen::VectorXd& query) {
  const Eigen::VectorXd ks = cross_kernel(fit, query);
  return ks.dot(fit.alpha) * fit.target_std + fit.target_mean;
}

double predict_var(const GPFit& fit, const Eigen::VectorXd& query) {
  const Eigen::VectorXd ks = cross_kernel(fit, query);
  const Eigen::VectorXd v =
      fit.chol_lower.triangularView<Eigen::Lower>().solve(ks);
  return std::max(0.0, 1.0 - v.squaredNorm());
}

double log_marginal_likelihood(const Eigen::MatrixXd& inputs,
                               const Eigen::VectorXd& targets,
                               const KernelConfig& config, double sigma_n_sq) {
  check_kernel(config);
  if (inputs.rows() != targets.size()) {
    throw data_error("inputs/targets size mismatch");
  }
  const Eigen::MatrixXd dist = pairwise_distances(inputs);
  const Eigen::MatrixXd k = kernel_from_distances(dist, config);
  const Factorization f = factorize(k, sigma_n_sq);
  return lml_from_factorization(f, targets);
}

KernelConfig optimize_length_scale(const Eigen::MatrixXd& inputs,
                                   const Eigen::VectorXd& targets,
                                   const KernelConfig& config,
                                   double sigma_n_sq) {
  KernelConfig probe = config;
  probe.length_scale = 1.0;
  check_kernel(probe);
  if (inputs.rows() != targets.size()) {
    throw data_error("inputs/targets size mismatch");
  }
  if (inputs.rows() < 2) {
    throw data_error("length-scale optimization needs at least 2 points");
  }

  // Stride-subsample large problems; the search only needs the likelihood
  // shape, the final fit keeps every row.
  Eigen::MatrixXd sub_inputs;
  Eigen::VectorXd sub_targets;
  const std::size_t m = std::size_t(inputs.rows());
  if (m > kMleMaxRows) {
    const std::size_t stride = (m + kMleMaxRows - 1) / kMleMaxRows;
    const std::size_t keep = (m + stride - 1) / stride;
    sub_inputs.resize(Eigen::Index(keep), inputs.cols());
    sub_targets.resize(Eigen::Index(keep));
    for (std::size_t i = 0, r = 0; i < m; i += stride, ++r) {
      sub_inputs.row(Eigen::Index(r)) = inputs.row(Eigen::Index(i));
      sub_targets(Eigen::Index(r)) = targets(Eigen::Index(i));
    }
  } else {
    sub_inputs = inputs;
    sub_targets = targets;
  }

  const TargetScaling scaling = target_scaling(sub_targets);
  const Eigen::VectorXd y =
      (sub_targets.array() - scaling.mean) / scaling.std;
  const Eigen::MatrixXd dist = pairwise_distances(sub_inputs);

  double lo = config.length_scale_lo;
  double hi = config.length_scale_hi;
  if (!(lo > 0.0) || !(hi > lo)) {
    std::vector<double> offdiag;
    offdiag.reserve(std::size_t(dist.rows()) * (std::size_t(dist.rows()) - 1) / 2);
    for (Eigen::Index i = 0; i < dist.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < dist.cols(); ++j) {
        offdiag.push_back(dist(i, j));
      }
    }
    std::nth_element(offdiag.begin(), offdiag.begin() + offdiag.size() / 2,
                     offdiag.end());
    const double median = offdiag[offdiag.size() / 2];
    if (!(median > 0.0)) {
      throw numeric_error("degenerate inputs: median pairwise distance is 0");
    }
    lo = 1e-2 * median;
    hi = 1e3 * median;
  }

  KernelConfig candidate = config;
  const auto eval = [&](double l) -> double {
    candidate.length_scale = l;
    const Eigen::MatrixXd k = kernel_from_distances(dist, candidate);
    try {
      return lml_from_factorization(factorize(k, sigma_n_sq), y);
    } catch (const numeric_error&) {
      return -std::numeric_limits<double>::infinity();
    }
  };

  const double log_lo = std::log(lo);
  const double log_hi = std::log(hi);
  double best_l = lo;
  double best_val = -std::numeric_limits<double>::infinity();
  std::size_t best_idx = 0;
  std::vector<double> grid(kMleGridPoints);
  for (std::size_t g = 0; g < kMleGridPoints; ++g) {
    const double t = double(g) / double(kMleGridPoints - 1);
    grid[g] = std::exp(log_lo + t * (log_hi - log_lo));
    const double v = eval(grid[g]);
    if (v > best_val) {
      best_val = v;
      best_l = grid[g];
      best_idx = g;
    }
  }
  if (!std::isfinite(best_val)) {
    throw numeric_error("every candidate length scale failed factorization");
  }

  // Golden-section refinement inside the bracketing cells.
  {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = std::log(grid[best_idx == 0 ? 0 : best_idx - 1]);
    double b = std::log(grid[std::min(best_idx + 1, kMleGridPoints - 1)]);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = eval(std::exp(c));
    double fd = eval(std::exp(d));
    for (int it = 0; it < 24 && (b - a) > 1e-10; ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = eval(std::exp(c));
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = eval(std::exp(d));
      }
      const double l = fc > fd ? std::exp(c) : std::exp(d);
      const double v = std::max(fc, fd);
      if (v > best_val) {
        best_val = v;
        best_l = l;
      }
    }
  }

  KernelConfig out = config;
  out.length_scale = best_l;
  out.length_scale_lo = lo;
  out.length_scale_hi = hi;
  out.at_bound =
      best_l <= lo * (1.0 + 1e-9) || best_l >= hi * (1.0 - 1e-9);
  return out;
}

}  // namespace infoimb
