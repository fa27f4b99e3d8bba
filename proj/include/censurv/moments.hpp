#ifndef CENSURV_MOMENTS_HPP
#define CENSURV_MOMENTS_HPP

#include <cstddef>
#include <vector>

#include "censurv/dataset.hpp"
#include "censurv/loess.hpp"

namespace censurv {

/// Raw conditional-moment estimates for one covariate on a time grid.
///
/// At each grid time t_k:
///   mu_hat/sigma2_hat   use the risk set {i : O_i >= t_k},
///   theta_hat/psi2_hat  use prior observed failures {i : d_i = 1, O_i < t_k}.
/// Zero-denominator grid points fall back to mean 0 / variance 1.
struct MomentEstimates {
  std::size_t covariate_index = 0;
  std::vector<double> times;
  std::vector<double> mu_hat;
  std::vector<double> sigma2_hat;
  std::vector<double> theta_hat;
  std::vector<double> psi2_hat;
  std::vector<long> riskset_sizes;   // n_k(>=)
  std::vector<long> failure_counts;  // n_k(<)
};

enum class MomentTarget { mu, sigma2, theta, psi2 };

/// Computes the four moment series for covariate j over `times` (strictly
/// increasing). Throws BadIndex, BadArgument.
MomentEstimates estimate_moments(const SurvivalDataset& dataset, std::size_t j,
                                 const std::vector<double>& times);

/// Precision weights for smoothing one moment series:
///   mean curves      w_k = n_k / s2_k,
///   variance curves  w_k = (n_k - 1) / (2 s2_k^2),
/// with (n_k, s2_k) from the risk set for mu/sigma2 and the prior-failure set
/// for theta/psi2. Points with n_k = 0, n_k = 1 (variance case) or s2_k = 0
/// get weight 0.
std::vector<double> precision_weights(const MomentEstimates& moments,
                                      MomentTarget target);

/// The four moment series after precision-weighted loess smoothing, defined
/// for all t in [0, t_K] by linear interpolation between grid fits and flat
/// extrapolation beyond the boundary. Variance curves are clamped at
/// config.variance_floor.
class SmoothedMomentCurves {
public:
  SmoothedMomentCurves(std::size_t covariate_index, std::vector<double> grid,
                       std::vector<double> mu, std::vector<double> sigma2,
                       std::vector<double> theta, std::vector<double> psi2);

  std::size_t covariate_index() const { return covariate_index_; }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& mu_values() const { return mu_; }
  const std::vector<double>& sigma2_values() const { return sigma2_; }
  const std::vector<double>& theta_values() const { return theta_; }
  const std::vector<double>& psi2_values() const { return psi2_; }

  double mu(double t) const { return interp(mu_, t); }
  double sigma2(double t) const { return interp(sigma2_, t); }
  double theta(double t) const { return interp(theta_, t); }
  double psi2(double t) const { return interp(psi2_, t); }

private:
  double interp(const std::vector<double>& values, double t) const;

  std::size_t covariate_index_;
  std::vector<double> grid_;
  std::vector<double> mu_, sigma2_, theta_, psi2_;
};

/// Smooths all four series of `moments` with their matching precision
/// weights. Throws InsufficientData.
SmoothedMomentCurves smooth_moments(const MomentEstimates& moments,
                                    const LoessConfig& config);

enum class CovariateBranch { geq, lt };  // condition on T >= t vs T < t

/// Normal density of the selected branch at covariate value x and time t,
/// with the 1/sqrt(v) normalization. Always finite and positive.
double conditional_density(const SmoothedMomentCurves& curves,
                           CovariateBranch branch, double x, double t);

/// log of conditional_density; the form used in model evaluation.
double conditional_log_density(const SmoothedMomentCurves& curves,
                               CovariateBranch branch, double x, double t);

}  // namespace censurv

#endif
