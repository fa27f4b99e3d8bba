#ifndef CENSURV_COX_HPP
#define CENSURV_COX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "censurv/cnb.hpp"
#include "censurv/dataset.hpp"

namespace censurv {

struct CoxFitConfig {
  double tolerance = 1e-8;  // on the gradient max-norm
  int max_iter = 100;
  bool standardize = true;
};

struct CoxConvergenceInfo {
  int iterations = 0;
  double gradient_norm = 0.0;
  double log_likelihood = 0.0;
};

/// Proportional-hazards comparator fitted by Breslow-ties partial likelihood
/// with a Breslow baseline cumulative hazard. Immutable once fitted.
class CoxModel {
public:
  CoxModel(std::vector<double> beta, std::vector<double> baseline_times,
           std::vector<double> baseline_cumhaz,
           std::optional<StandardizationParams> standardization,
           CoxConvergenceInfo convergence, std::vector<std::string> covariate_names);

  /// Lambda0(t): step function, 0 before the first event time.
  double baseline_cumhaz(double t) const;

  /// exp(-Lambda0(t) * exp(beta'x)) with stored standardization applied to x.
  /// Throws DimensionMismatch.
  double predict_survival(const std::vector<double>& x, double t) const;

  std::vector<double> predict_curve(const std::vector<double>& x,
                                    const std::vector<double>& times) const;

  const std::vector<double>& beta() const { return beta_; }
  const std::vector<double>& baseline_times() const { return baseline_times_; }
  const std::vector<double>& baseline_cumhaz_values() const { return baseline_cumhaz_; }
  const std::optional<StandardizationParams>& standardization() const {
    return standardization_;
  }
  const CoxConvergenceInfo& convergence() const { return convergence_; }
  const std::vector<std::string>& covariate_names() const { return names_; }
  std::size_t num_covariates() const { return beta_.size(); }

private:
  std::vector<double> beta_;
  std::vector<double> baseline_times_;
  std::vector<double> baseline_cumhaz_;
  std::optional<StandardizationParams> standardization_;
  CoxConvergenceInfo convergence_;
  std::vector<std::string> names_;
};

/// Maximizes the Breslow partial likelihood by damped Newton iteration
/// (step halving whenever a step lowers the likelihood) started at beta = 0.
/// Throws NoEvents, NotConverged, SingularInformation.
CoxModel fit_cox(const SurvivalDataset& dataset, const CoxFitConfig& config = {});

}  // namespace censurv

#endif
