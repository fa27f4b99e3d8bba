#ifndef CENSURV_CNB_HPP
#define CENSURV_CNB_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "censurv/dataset.hpp"
#include "censurv/kaplan_meier.hpp"
#include "censurv/moments.hpp"

namespace censurv {

/// Per-covariate centering/scaling captured at fit time and re-applied to
/// every prediction input, so predictions take raw-scale covariates.
struct StandardizationParams {
  std::vector<double> means;
  std::vector<double> sds;  // > 0; constant columns get sd = 1

  std::vector<double> apply(const std::vector<double>& x) const;
};

struct CnbFitConfig {
  LoessConfig loess;
  bool standardize = true;
  std::size_t grid_cap = 1000;  // moment grid thinned to this many times
  int threads = 1;              // per-covariate fitting parallelism
};

/// Censored naive-Bayes survival model: a marginal product-limit curve plus
/// per-covariate smoothed conditional moment curves, combined by a Bayes-rule
/// plug-in into the conditional survivor function. Immutable once fitted.
class CnbModel {
public:
  CnbModel(KaplanMeierCurve km, std::vector<SmoothedMomentCurves> curves,
           std::optional<StandardizationParams> standardization,
           LoessConfig loess_config, std::vector<double> grid,
           std::vector<std::string> covariate_names);

  /// S_X(t) for one subject; always in [0, 1]. The product of covariate
  /// density ratios is accumulated in the log domain so moderate p cannot
  /// underflow. Throws DimensionMismatch.
  double predict_survival(const std::vector<double>& x, double t) const;

  /// Pointwise predict_survival over `times`; no monotonicity in t is implied.
  std::vector<double> predict_curve(const std::vector<double>& x,
                                    const std::vector<double>& times) const;

  const KaplanMeierCurve& km() const { return km_; }
  const std::vector<SmoothedMomentCurves>& curves() const { return curves_; }
  const std::optional<StandardizationParams>& standardization() const {
    return standardization_;
  }
  const LoessConfig& loess_config() const { return loess_config_; }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<std::string>& covariate_names() const { return names_; }
  std::size_t num_covariates() const { return curves_.size(); }

private:
  KaplanMeierCurve km_;
  std::vector<SmoothedMomentCurves> curves_;
  std::optional<StandardizationParams> standardization_;
  LoessConfig loess_config_;
  std::vector<double> grid_;
  std::vector<std::string> names_;
};

/// Fits standardization (optional), the product-limit curve, and smoothed
/// moment curves for every covariate (parallel across covariates).
/// Throws NoEvents, InsufficientData.
CnbModel fit_cnb(const SurvivalDataset& dataset, const CnbFitConfig& config = {});

/// Event-time grid used for moment estimation: all distinct event times, or
/// `cap` quantile-spaced ones when there are more than that.
std::vector<double> moment_grid(const SurvivalDataset& dataset, std::size_t cap);

StandardizationParams compute_standardization(const SurvivalDataset& dataset);

}  // namespace censurv

#endif
