#ifndef CENSURV_KAPLAN_MEIER_HPP
#define CENSURV_KAPLAN_MEIER_HPP

#include <vector>

#include "censurv/dataset.hpp"

namespace censurv {

/// Product-limit estimate of the marginal survivor function S(t) = P(T >= t).
///
/// Steps live at the distinct observed event times t_1 < ... < t_K.
/// survival_values[m] is the value on (t_m, t_{m+1}]: the step at t_m takes
/// effect only for t > t_m, so eval(t_m) still excludes it (left-continuous
/// P(T >= t) convention).
struct KaplanMeierCurve {
  std::vector<double> event_times;
  std::vector<double> survival_values;  // prod_{j<=m} (1 - e_j/r_j)
  std::vector<long> at_risk_counts;     // r_m = #{O_i >= t_m}
  std::vector<long> event_counts;       // e_m = #{i : d_i = 1, O_i = t_m}

  /// S(t) = prod over event times strictly below t of (1 - e_m/r_m).
  /// Returns 1 for t <= t_1 and holds the last value beyond t_K.
  double eval(double t) const;
};

/// Distinct times at which uncensored failures occur, ascending.
/// Throws NoEvents when the dataset has no failures.
std::vector<double> distinct_event_times(const SurvivalDataset& dataset);

/// Fits the product-limit curve. Throws NoEvents.
///
/// Survival values are carried as exact integer ratios while they fit in
/// 64 bits, so on fully uncensored data eval(t) equals #{O_i >= t}/n exactly.
KaplanMeierCurve fit_kaplan_meier(const SurvivalDataset& dataset);

}  // namespace censurv

#endif
