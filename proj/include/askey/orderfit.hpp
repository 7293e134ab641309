#ifndef ASKEY_ORDERFIT_HPP
#define ASKEY_ORDERFIT_HPP

// Convergence-order estimation: fit a line through (log10 param, log10 error)
// and report the slope. Quantifies the O(.) statements the asymptotics lab
// measures.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "askey/errors.hpp"

namespace askey {

/// Fitted log-log slope with residual. `residual` is the maximum absolute
/// deviation of the points from the fit line, in decades.
struct OrderEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  std::vector<std::pair<double, double>> points;  // (param, error)
};

inline void check_geometric_grid(const std::vector<double>& grid) {
  if (grid.size() < 4) throw GridTooSmall("need at least 4 grid points");
  for (double p : grid)
    if (!(p > 0.0)) throw BadGrid("grid parameters must be positive");
  const double ratio = grid[1] / grid[0];
  for (size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw BadGrid("grid parameters must be strictly increasing");
    const double r = grid[i] / grid[i - 1];
    if (std::abs(r / ratio - 1.0) > 0.01) throw BadGrid("grid must be geometric within 1%");
  }
}

/// Least-squares line through (log10 param, log10 error). A zero error
/// short-circuits to the slope = -inf sentinel; negative errors are refused.
inline OrderEstimate estimate_order(const std::vector<std::pair<double, double>>& points) {
  std::vector<double> grid;
  grid.reserve(points.size());
  for (const auto& pe : points) grid.push_back(pe.first);
  check_geometric_grid(grid);

  OrderEstimate est;
  est.points = points;
  bool any_zero = false;
  for (const auto& [p, e] : points) {
    if (e < 0.0) throw NonpositiveError("errors must be nonnegative");
    if (e == 0.0) any_zero = true;
  }
  if (any_zero) {
    est.slope = -std::numeric_limits<double>::infinity();
    est.intercept = 0.0;
    est.residual = 0.0;
    return est;
  }

  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [p, e] : points) {
    const double lx = std::log10(p), ly = std::log10(e);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  est.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  est.intercept = (sy - est.slope * sx) / n;
  for (const auto& [p, e] : points) {
    const double dev = std::abs(std::log10(e) - (est.slope * std::log10(p) + est.intercept));
    est.residual = std::max(est.residual, dev);
  }
  return est;
}

template <class F>
OrderEstimate estimate_order(F&& err_fn, const std::vector<double>& grid) {
  check_geometric_grid(grid);
  std::vector<std::pair<double, double>> points;
  points.reserve(grid.size());
  for (double p : grid) points.emplace_back(p, static_cast<double>(err_fn(p)));
  return estimate_order(points);
}

inline std::vector<double> geometric_grid(double start, double ratio, int count) {
  if (count < 4) throw GridTooSmall("need at least 4 grid points");
  std::vector<double> g;
  g.reserve(static_cast<size_t>(count));
  double v = start;
  for (int i = 0; i < count; ++i) {
    g.push_back(v);
    v *= ratio;
  }
  if (ratio < 1.0) std::reverse(g.begin(), g.end());
  return g;
}

}  // namespace askey

#endif  // ASKEY_ORDERFIT_HPP
