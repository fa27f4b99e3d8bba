#ifndef CENSURV_METRICS_HPP
#define CENSURV_METRICS_HPP

#include <cstdint>
#include <vector>

#include "censurv/cnb.hpp"
#include "censurv/cox.hpp"
#include "censurv/dataset.hpp"

namespace censurv {

struct CalibrationReport {
  double bias = 0.0;      // mean(predicted - true)
  double mse_x100 = 0.0;  // 100 * mean((predicted - true)^2)
};

/// Throws LengthMismatch.
CalibrationReport bias_mse(const std::vector<double>& predicted,
                           const std::vector<double>& truth);

/// Ordered cutpoints partitioning [0,1] into risk bins. Bin of p is the
/// number of cutpoints strictly below p, so with all-equal degenerate
/// cutpoints everything lands in bin 0.
struct RiskCategories {
  std::vector<double> cutpoints;

  int categorize(double p) const;
  std::vector<int> categorize(const std::vector<double>& probs) const;
};

/// 25/50/75th percentiles (linear-interpolation quantiles) of the true event
/// probabilities. Throws TooFew below 4 values.
RiskCategories quartile_categories(const std::vector<double>& true_probs);

/// Reclassification comparison of model A against model B; positive values
/// favour A. For the censoring-adjusted variant the up/down counts are
/// expected counts from subset product-limit curves rather than integers.
struct ReclassificationReport {
  double ri_events = 0.0;
  double ri_nonevents = 0.0;
  double nri = 0.0;  // always ri_events + ri_nonevents
  double up_events = 0.0, down_events = 0.0;        // events moved up/down by A
  double up_nonevents = 0.0, down_nonevents = 0.0;  // non-events moved up/down by A
  int empty_subset_fallbacks = 0;  // cNRI subsets with no usable curve
  // Bootstrap fields; meaningful when b_effective > 0.
  double ci_halfwidth = 0.0;
  std::int64_t b_effective = 0;
  std::int64_t failed_replicates = 0;
};

/// NRI from known event status (true T < horizon). bins_a is the candidate
/// model. Throws LengthMismatch, NoEvents, NoNonEvents.
ReclassificationReport nri(const std::vector<bool>& event_flags,
                           const std::vector<int>& bins_a,
                           const std::vector<int>& bins_b);

/// Censoring-adjusted NRI on a censored test set. preds are event
/// probabilities by `horizon`; expected event counts per reclassification
/// subset come from product-limit curves fitted within the subset, with
/// eventless or empty subsets contributing 0 expected events.
/// Throws LengthMismatch, BadArgument (horizon beyond follow-up), NoEvents,
/// NoNonEvents.
ReclassificationReport cnri(const SurvivalDataset& test,
                            const std::vector<double>& preds_a,
                            const std::vector<double>& preds_b,
                            const RiskCategories& categories, double horizon);

enum class ModelKind { cnb, cox };

/// What to fit on each bootstrap resample.
struct FitRecipe {
  ModelKind kind = ModelKind::cnb;
  CnbFitConfig cnb;
  CoxFitConfig cox;
};

/// Fits `recipe` on `train` and returns event probabilities 1 - S_X(horizon)
/// for every subject of `test`.
std::vector<double> fit_and_predict_events(const SurvivalDataset& train,
                                           const SurvivalDataset& test,
                                           const FitRecipe& recipe, double horizon);

/// Point cNRI from models fitted on `train`, plus a Wald CI from `B`
/// n-out-of-n resamples of the training data (test set fixed). Replicates
/// that fail to fit are dropped and counted. Replicate b depends only on
/// (seed, b); the computation parallelizes over replicates.
ReclassificationReport bootstrap_cnri(const SurvivalDataset& train,
                                      const SurvivalDataset& test,
                                      const FitRecipe& recipe_a,
                                      const FitRecipe& recipe_b,
                                      const RiskCategories& categories,
                                      double horizon, std::int64_t B,
                                      std::uint64_t seed, int threads = 1);

}  // namespace censurv

#endif
