#include "censurv/kaplan_meier.hpp"

#include <algorithm>
#include <numeric>

#include "censurv/error.hpp"

namespace censurv {

double KaplanMeierCurve::eval(double t) const {
  // Count event times strictly below t; the step at t itself is excluded.
  const auto it = std::lower_bound(event_times.begin(), event_times.end(), t);
  const auto k = static_cast<std::size_t>(it - event_times.begin());
  if (k == 0) return 1.0;
  return survival_values[k - 1];
}

std::vector<double> distinct_event_times(const SurvivalDataset& dataset) {
  std::vector<double> times;
  for (const auto& s : dataset.subjects())
    if (s.event) times.push_back(s.time);
  if (times.empty())
    throw_error(ErrorCode::no_events, "dataset contains no uncensored failures");
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

KaplanMeierCurve fit_kaplan_meier(const SurvivalDataset& dataset) {
  KaplanMeierCurve curve;
  curve.event_times = distinct_event_times(dataset);
  const std::size_t k = curve.event_times.size();
  curve.at_risk_counts.assign(k, 0);
  curve.event_counts.assign(k, 0);

  std::vector<double> observed;
  observed.reserve(dataset.size());
  for (const auto& s : dataset.subjects()) observed.push_back(s.time);
  std::sort(observed.begin(), observed.end());

  for (std::size_t m = 0; m < k; ++m) {
    const double tm = curve.event_times[m];
    const auto first_geq = std::lower_bound(observed.begin(), observed.end(), tm);
    curve.at_risk_counts[m] = static_cast<long>(observed.end() - first_geq);
  }
  for (const auto& s : dataset.subjects()) {
    if (!s.event) continue;
    const auto it = std::lower_bound(curve.event_times.begin(),
                                     curve.event_times.end(), s.time);
    ++curve.event_counts[static_cast<std::size_t>(it - curve.event_times.begin())];
  }

  // Carry the running product as an exact integer ratio while it fits in
  // 64 bits. On uncensored data the ratio telescopes to r_{m+1}/n, so eval
  // matches the empirical survivor function without rounding drift.
  curve.survival_values.assign(k, 0.0);
  unsigned long long num = 1, den = 1;
  bool exact = true;
  double running = 1.0;
  constexpr unsigned long long limit = 1ULL << 62;
  for (std::size_t m = 0; m < k; ++m) {
    const auto r = static_cast<unsigned long long>(curve.at_risk_counts[m]);
    const auto e = static_cast<unsigned long long>(curve.event_counts[m]);
    if (exact) {
      unsigned long long a = r - e, b = r;  // multiply by a/b, cross-reduced
      const unsigned long long g1 = std::gcd(a, den);
      a /= g1;
      const unsigned long long den_r = den / g1;
      const unsigned long long g2 = std::gcd(num, b);
      const unsigned long long num_r = num / g2;
      b /= g2;
      const auto wide_num = static_cast<unsigned __int128>(num_r) * a;
      const auto wide_den = static_cast<unsigned __int128>(den_r) * b;
      if (wide_num < limit && wide_den < limit) {
        num = static_cast<unsigned long long>(wide_num);
        den = static_cast<unsigned long long>(wide_den);
        running = static_cast<double>(num) / static_cast<double>(den);
      } else {
        exact = false;
        running *= static_cast<double>(r - e) / static_cast<double>(r);
      }
    } else {
      running *= static_cast<double>(r - e) / static_cast<double>(r);
    }
    curve.survival_values[m] = running;
  }
  return curve;
}

}  // namespace censurv
