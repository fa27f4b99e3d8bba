#ifndef CENSURV_LOESS_HPP
#define CENSURV_LOESS_HPP

#include <vector>

#include "censurv/dataset.hpp"

namespace censurv {

/// Local regression settings. span is the fraction of usable (positively
/// weighted) points entering each local window.
struct LoessConfig {
  double span = 0.75;
  int degree = 1;  // 1 or 2
  double variance_floor = 1e-6;
};

/// Weighted loess: at each grid point, a polynomial of the configured degree
/// is fitted by weighted least squares over the span-nearest positively
/// weighted neighbours, with weights tricube(kernel distance) * w_k, and
/// evaluated at the point.
///
/// Points with w_k = 0 never enter a local system but still receive fitted
/// values. Throws InsufficientData when fewer than degree+2 points have
/// positive weight, BadArgument on malformed input.
std::vector<double> fit_weighted_loess(const std::vector<double>& xs,
                                       const std::vector<double>& ys,
                                       const std::vector<double>& ws,
                                       const LoessConfig& config);

}  // namespace censurv

#endif
