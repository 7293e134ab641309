#ifndef ASKEY_HERMITE_HPP
#define ASKEY_HERMITE_HPP

// Hermite-type finite expansion: for a family with generating series
// F(x,w) = sum p_n w^n, write F = e^{Aw - Bw^2} f(x,w) with A = p1,
// B = p1^2/2 - p2 (so the w and w^2 coefficients of f vanish). Then
//   p_n = z^n sum_{k=0}^n (c_k / z^k) H_{n-k}(xi) / (n-k)!,
// z = sqrt(B), xi = A/(2 sqrt(B)), exactly -- terms with k > n contribute
// nothing. Truncating below n gives the asymptotic approximant.

#include <utility>
#include <vector>

#include "askey/errors.hpp"
#include "askey/families.hpp"
#include "askey/orderfit.hpp"
#include "askey/series.hpp"

namespace askey {

template <class T>
struct HermitePlan {
  T A = T(0);
  T B = T(0);
  T z = T(0);   // sqrt(B), principal branch
  T xi = T(0);  // A / (2 z)
  std::vector<T> c;  // c_0 .. c_K of f(x,w)
};

/// Build the plan for `spec` keeping expansion coefficients up to c_K.
/// Throws DegenerateB when |B| vanishes to working precision (for example
/// the ultraspherical family at x = +-1/sqrt(2)); the expansion point is
/// invalid there and the caller must perturb or reject.
template <class T>
HermitePlan<T> build_hermite_plan(const FamilySpec<T>& spec, int K) {
  using R = real_of<T>;
  if (K < 0) throw InvalidParameter("K: must be >= 0");
  const int order = (std::max)(K, 2);
  auto F = generating_series_hermite_route(spec, order);
  const T p1 = F[1], p2 = F[2];
  HermitePlan<T> plan;
  plan.A = p1;
  plan.B = p1 * p1 / R(2) - p2;
  const R bscale = (std::max)(R(1), (std::max)(abs_value(p1 * p1) / R(2), abs_value(p2)));
  if (abs_value(plan.B) <= pow10<R>(6 - working_digits<T>()) * bscale)
    throw DegenerateB("B vanishes at this expansion point");
  using std::sqrt;
  plan.z = sqrt(plan.B);
  plan.xi = plan.A / (R(2) * plan.z);
  // c_k = coefficients of e^{-Aw + Bw^2} F(x,w); c1, c2 vanish by the choice of A, B
  auto damp = TruncatedSeries<T>::monomial(1, -plan.A, order) + TruncatedSeries<T>::monomial(2, plan.B, order);
  auto f = exp_series(damp) * F;
  plan.c.assign(f.coeffs().begin(), f.coeffs().begin() + K + 1);
  return plan;
}

/// z^n sum_{k=0}^{upTo} (c_k/z^k) H_{n-k}(xi)/(n-k)!; with upTo == n this
/// reproduces the series coefficient p_n exactly (to working precision).
template <class T>
T eval_hermite_expansion(const HermitePlan<T>& plan, int n, int up_to) {
  using R = real_of<T>;
  if (up_to < 0 || up_to > n) throw TruncationOutOfRange("upTo must satisfy 0 <= upTo <= n");
  if (static_cast<int>(plan.c.size()) <= up_to)
    throw TruncationOutOfRange("plan does not carry enough coefficients");
  // Hermite values H_{n-upTo}..H_n at xi in one recurrence pass
  std::vector<T> H(static_cast<size_t>(n) + 1);
  {
    T prev = T(1), cur = R(2) * plan.xi;
    H[0] = prev;
    if (n >= 1) H[1] = cur;
    for (int m = 2; m <= n; ++m) {
      T next = R(2) * plan.xi * cur - R(2 * (m - 1)) * prev;
      prev = cur;
      cur = next;
      H[static_cast<size_t>(m)] = cur;
    }
  }
  // accumulate z^{n-k} c_k H_{n-k}(xi)/(n-k)! directly
  T sum(0);
  for (int k = 0; k <= up_to; ++k) {
    T zpow(1);
    for (int j = 0; j < n - k; ++j) zpow *= plan.z;
    sum += zpow * plan.c[static_cast<size_t>(k)] * H[static_cast<size_t>(n - k)] /
           factorial_value<R>(n - k);
  }
  return sum;
}

enum class HermiteLimitKind { GegenbauerI2, LaguerreI4, GegenbauerExact };

/// Absolute difference between the scaled polynomial and its Hermite limit
/// target at one value of the large parameter (recurrence route).
///  - GegenbauerI2:    |g^{-n/2} C_n^g(x/sqrt(g)) - H_n(x)/n!|
///  - LaguerreI4:      |a^{-n/2} L_n^a(x sqrt(a)+a) - (-1)^n 2^{-n/2} H_n(x/sqrt(2))/n!|
///  - GegenbauerExact: |(g+2x^2)^{n/2}/g^n * C_n^g(x/sqrt(g+2x^2)) - H_n(x)/n!|
/// The last scaling is the reciprocal of z^n = g^n/(g+2x^2)^{n/2}; with it the
/// n = 0,1,2 cases reproduce H_n/n! exactly.
template <class T>
real_of<T> hermite_limit_error(HermiteLimitKind kind, int n, const T& x, const real_of<T>& param) {
  using R = real_of<T>;
  using std::sqrt, std::pow;
  const R fact = factorial_value<R>(n);
  switch (kind) {
    case HermiteLimitKind::GegenbauerI2: {
      T scaled = recurrence::ultraspherical(n, param, x / sqrt(T(param))) / pow(T(param), T(R(n) / R(2)));
      return abs_value(scaled - recurrence::hermite(n, x) / fact);
    }
    case HermiteLimitKind::LaguerreI4: {
      T arg = x * sqrt(T(param)) + T(param);
      T scaled = recurrence::laguerre(n, T(param), arg) / pow(T(param), T(R(n) / R(2)));
      T target = recurrence::hermite(n, x / sqrt(T(2))) / (pow(T(2), T(R(n) / R(2))) * fact);
      if (n % 2 == 1) target = -target;
      return abs_value(scaled - target);
    }
    case HermiteLimitKind::GegenbauerExact: {
      T shift = T(param) + R(2) * x * x;
      T scaled = recurrence::ultraspherical(n, param, x / sqrt(shift)) *
                 pow(shift, T(R(n) / R(2))) / pow(T(param), T(R(n)));
      return abs_value(scaled - recurrence::hermite(n, x) / fact);
    }
  }
  throw InvalidParameter("limit kind: unknown");
}

/// Fit the decay order of a Hermite-direction limit over a geometric
/// parameter grid (>= 4 points).
template <class T>
OrderEstimate hermite_limit_check(HermiteLimitKind kind, int n, const T& x, const std::vector<double>& grid) {
  if (grid.size() < 4) throw GridTooSmall("need at least 4 grid points");
  std::vector<std::pair<double, double>> points;
  points.reserve(grid.size());
  for (double p : grid) {
    auto err = hermite_limit_error(kind, n, x, real_of<T>(p));
    points.emplace_back(p, static_cast<double>(err));
  }
  return estimate_order(points);
}

}  // namespace askey

#endif  // ASKEY_HERMITE_HPP
