#pragma once

#include <Eigen/Dense>

namespace infoimb {

/// Matern kernel configuration. Only the closed-form orders are supported:
/// nu = 0.5, 1.5 (default) and 2.5.
struct KernelConfig {
  double nu = 1.5;
  double length_scale = 1.0;
  /// Search bounds for length-scale optimization; both zero means
  /// "derive from the data" ([1e-2, 1e3] times the median pairwise distance).
  double length_scale_lo = 0.0;
  double length_scale_hi = 0.0;
  /// Set by optimize_length_scale when the optimum sits on a search bound
  /// (flat or monotone likelihood); informational, not an error.
  bool at_bound = false;
};

/// Stationary Matern covariance of the distance between two points.
/// k(0) = 1; k decays on the scale of length_scale. Throws on l <= 0 or an
/// unsupported nu.
double matern_value(double distance, const KernelConfig& config);

double matern_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& x2,
                     const KernelConfig& config);

/// Fitted Gaussian Process. Targets are standardized internally; predictions
/// are mapped back. chol_lower * chol_lower^T reconstructs K + noise*I and
/// alpha solves (K + noise*I) alpha = y_standardized.
struct GPFit {
  Eigen::MatrixXd train_inputs;  // M x d
  Eigen::VectorXd alpha;
  Eigen::MatrixXd chol_lower;
  KernelConfig kernel;
  /// Noise actually on the diagonal: requested sigma_n_sq plus the floor
  /// (1e-10 when zero) plus any jitter needed to factorize.
  double effective_noise = 0.0;
  double target_mean = 0.0;
  double target_std = 1.0;

  std::size_t size() const { return std::size_t(train_inputs.rows()); }
  std::size_t dim() const { return std::size_t(train_inputs.cols()); }
};

/// Fit on M x d inputs. sigma_n_sq >= 0; zero is floored at 1e-10 so the
/// factorization stays positive definite. On factorization failure jitter
/// escalates 1e-10 -> 1e-8 -> 1e-6, then a numeric_error is thrown.
GPFit fit(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& targets,
          const KernelConfig& config, double sigma_n_sq);

/// Extension point: heteroscedastic fit with one noise variance per
/// observation. effective_noise records the smallest diagonal entry.
GPFit fit(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& targets,
          const KernelConfig& config, const Eigen::VectorXd& sigma_n_sq);

/// Posterior mean at a query point, on the original target scale.
double predict_mean(const GPFit& fit, const Eigen::VectorXd& query);

/// Posterior variance at a query point on the standardized-target scale
/// (the prior variance is 1), clamped at zero.
double predict_var(const GPFit& fit, const Eigen::VectorXd& query);

/// log p(y | inputs, l) = -1/2 y^T A^-1 y - 1/2 log det A - M/2 log 2pi,
/// A = K + sigma_n_sq I, evaluated on the targets exactly as given.
double log_marginal_likelihood(const Eigen::MatrixXd& inputs,
                               const Eigen::VectorXd& targets,
                               const KernelConfig& config, double sigma_n_sq);

/// Maximize the log marginal likelihood of the internally standardized
/// targets over the length scale: a 64-point log-spaced grid pass over the
/// bounds, then golden-section refinement around the best cell. The returned
/// value is the best point evaluated anywhere, so it never falls below the
/// grid maximum. Deterministic. Inputs with more than 320 rows are strided
/// down for this search only (the subsequent fit uses all rows).
KernelConfig optimize_length_scale(const Eigen::MatrixXd& inputs,
                                   const Eigen::VectorXd& targets,
                                   const KernelConfig& config,
                                   double sigma_n_sq);

}  // namespace infoimb
