#include "censurv/loess.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "censurv/error.hpp"

namespace censurv {

namespace {

double tricube(double u) {
  const double a = std::abs(u);
  if (a >= 1.0) return 0.0;
  const double c = 1.0 - a * a * a;
  return c * c * c;
}

// Weighted polynomial fit over [lo, hi) of the candidate index range,
// evaluated at x0. Degree falls back towards a weighted mean whenever the
// normal equations go singular (e.g. all usable mass on a single x).
double local_fit(const std::vector<double>& xs, const std::vector<double>& ys,
                 const std::vector<double>& ws, const std::vector<std::size_t>& idx,
                 std::size_t lo, std::size_t hi, double x0, double bandwidth,
                 int degree) {
  // Normal equations in centered coordinates z = x - x0; the intercept of the
  // local polynomial is the fitted value at x0.
  std::array<double, 5> zmom{};  // sum w z^r, r = 0..4
  std::array<double, 3> ymom{};  // sum w z^r y, r = 0..2
  for (std::size_t s = lo; s < hi; ++s) {
    const std::size_t i = idx[s];
    const double z = xs[i] - x0;
    double w = ws[i];
    if (bandwidth > 0.0) w *= tricube(z / bandwidth);
    if (w <= 0.0) continue;
    double zr = w;
    for (int r = 0; r <= 2 * degree; ++r) {
      zmom[static_cast<std::size_t>(r)] += zr;
      zr *= z;
    }
    double zy = w * ys[i];
    for (int r = 0; r <= degree; ++r) {
      ymom[static_cast<std::size_t>(r)] += zy;
      zy *= z;
    }
  }
  if (zmom[0] <= 0.0) {
    // Kernel zeroed everything (all candidates at the window edge); fall back
    // to the plain precision-weighted mean of the window.
    double sw = 0.0, swy = 0.0;
    for (std::size_t s = lo; s < hi; ++s) {
      const std::size_t i = idx[s];
      sw += ws[i];
      swy += ws[i] * ys[i];
    }
    return sw > 0.0 ? swy / sw : 0.0;
  }

  for (int d = degree; d >= 1; --d) {
    if (d == 1) {
      const double det = zmom[0] * zmom[2] - zmom[1] * zmom[1];
      if (std::abs(det) > 1e-12 * std::max(1.0, zmom[0] * zmom[2])) {
        return (ymom[0] * zmom[2] - ymom[1] * zmom[1]) / det;
      }
    } else {
      // 3x3 symmetric solve via cofactor expansion for the intercept.
      const double a = zmom[0], b = zmom[1], c = zmom[2], d3 = zmom[3], e = zmom[4];
      const double det = a * (c * e - d3 * d3) - b * (b * e - d3 * c) +
                         c * (b * d3 - c * c);
      const double scale = std::max(1.0, a * c * e);
      if (std::abs(det) > 1e-12 * scale) {
        const double c00 = c * e - d3 * d3;
        const double c01 = -(b * e - c * d3);
        const double c02 = b * d3 - c * c;
        return (ymom[0] * c00 + ymom[1] * c01 + ymom[2] * c02) / det;
      }
    }
  }
  return ymom[0] / zmom[0];
}

}  // namespace

std::vector<double> fit_weighted_loess(const std::vector<double>& xs,
                                       const std::vector<double>& ys,
                                       const std::vector<double>& ws,
                                       const LoessConfig& config) {
  const std::size_t n = xs.size();
  if (ys.size() != n || ws.size() != n)
    throw_error(ErrorCode::length_mismatch, "loess inputs have different lengths");
  if (config.degree != 1 && config.degree != 2)
    throw_error(ErrorCode::bad_argument, "loess degree must be 1 or 2");
  if (!(config.span > 0.0) || config.span > 1.0)
    throw_error(ErrorCode::bad_argument, "loess span must be in (0, 1]");
  for (std::size_t i = 1; i < n; ++i)
    if (!(xs[i] > xs[i - 1]))
      throw_error(ErrorCode::bad_argument, "loess grid must be strictly increasing");
  for (double w : ws)
    if (!(w >= 0.0))
      throw_error(ErrorCode::bad_argument, "loess weights must be nonnegative");

  // Local systems only ever see positively weighted points.
  std::vector<std::size_t> usable;
  usable.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (ws[i] > 0.0) usable.push_back(i);
  const std::size_t m = usable.size();
  const auto degree = static_cast<std::size_t>(config.degree);
  if (m < degree + 2)
    throw_error(ErrorCode::insufficient_data,
                "loess needs at least " + std::to_string(degree + 2) +
                    " positively weighted points, got " + std::to_string(m));

  std::size_t q = static_cast<std::size_t>(
      std::ceil(config.span * static_cast<double>(m)));
  q = std::max(q, degree + 1);
  q = std::min(q, m);

  std::vector<double> fitted(n);
  std::size_t lo = 0;  // sliding window [lo, lo+q) over `usable`
  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = xs[i];
    // Advance the window while the point just beyond it is nearer than the
    // window's far-left member.
    while (lo + q < m &&
           xs[usable[lo + q]] - x0 < x0 - xs[usable[lo]])
      ++lo;
    // The window is shared across evaluation points; rewind for early points.
    while (lo > 0 && xs[usable[lo + q - 1]] - x0 > x0 - xs[usable[lo - 1]])
      --lo;
    const double bandwidth = std::max(x0 - xs[usable[lo]],
                                      xs[usable[lo + q - 1]] - x0);
    fitted[i] = local_fit(xs, ys, ws, usable, lo, lo + q, x0, bandwidth,
                          config.degree);
  }
  return fitted;
}

}  // namespace censurv
