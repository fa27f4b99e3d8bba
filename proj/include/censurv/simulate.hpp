#ifndef CENSURV_SIMULATE_HPP
#define CENSURV_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "censurv/dataset.hpp"

namespace censurv {

enum class Scenario { weibull_ph, loglogistic_aft, misspecified_ehr };

/// Fixed generator constants shared by every scenario.
namespace sim_constants {
inline constexpr double weibull_lambda = 0.01;
inline constexpr double weibull_shape = 2.0;   // nu
inline constexpr double loglogistic_scale = 20.0;  // phi
inline constexpr double censor_cap = 10.0;         // C = min(10, U(0,20))
inline constexpr double censor_range = 20.0;
inline constexpr double age_shape = 10.0;
inline constexpr double age_scale = 50.0;
inline constexpr double age_cap = 100.0;
inline constexpr double sbp_sd = 15.0;
}  // namespace sim_constants

struct ScenarioConfig {
  Scenario variant = Scenario::weibull_ph;
  std::int64_t n = 1000;
  double beta0 = 0.0;
  double rho = 0.0;          // exchangeable covariate correlation
  std::uint64_t seed = 0;
  double horizon = 7.0;      // truth channel probe time
};

/// A censored dataset together with its generation-time truth: the latent
/// failure/censoring times and the closed-form S_X(horizon) per subject.
/// risk_params holds the per-subject scalar the survivor formula needs
/// (linear predictor for Weibull-PH, the survivor exponent's scale for the
/// log-logistic variants), so truth at any other time is recoverable.
struct SimulatedDataset {
  SurvivalDataset data;
  std::vector<double> true_times;
  std::vector<double> censor_times;
  std::vector<double> true_survival_at_horizon;
  std::vector<double> risk_params;
  ScenarioConfig config;
};

/// n x p matrix with X_ij = sqrt(rho) Z_i0 + sqrt(1-rho) Z_ij; marginally
/// standard normal with exchangeable pairwise correlation rho.
/// Throws BadRho (BadArgument) outside [0, 1).
std::vector<std::vector<double>> gen_correlated_normals(std::int64_t n, std::size_t p,
                                                        double rho, std::uint64_t seed);

/// C_i = min(10, Unif(0, 20)); P(C = 10) = 1/2.
std::vector<double> gen_censoring(std::int64_t n, std::uint64_t seed);

SimulatedDataset gen_weibull_ph(const ScenarioConfig& config);
SimulatedDataset gen_loglogistic_aft(const ScenarioConfig& config);
SimulatedDataset gen_misspecified(const ScenarioConfig& config);

/// Dispatch on config.variant. Throws UnknownVariant.
SimulatedDataset generate(const ScenarioConfig& config);

/// Closed-form S(t | risk_param) for the variant (see SimulatedDataset).
double true_survival(Scenario variant, double risk_param, double t);

}  // namespace censurv

#endif
