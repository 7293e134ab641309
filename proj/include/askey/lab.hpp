#ifndef ASKEY_LAB_HPP
#define ASKEY_LAB_HPP

// Empirical verification engine: reproduce every limit relation between
// the families, measure truncation-error orders of the expansions, and
// check the coefficient growth law that explains why the truncations are
// asymptotic. Polynomial values here go through the recurrence route,
// which is independent of the series engine under test elsewhere.

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "askey/errors.hpp"
#include "askey/families.hpp"
#include "askey/hermite.hpp"
#include "askey/laguerre.hpp"
#include "askey/orderfit.hpp"

namespace askey {

enum class LimitCaseId {
  GegenbauerToHermite_i2,
  LaguerreToHermite_i4,
  GegenbauerExact_s21,
  MPtoLaguerre_lambdaHalf,
  MPtoLaguerre_f8,
  JacobiToLaguerre,
  JacobiToLaguerre_Askey,
  MeixnerToLaguerre,
};

inline const char* limit_case_name(LimitCaseId id) {
  switch (id) {
    case LimitCaseId::GegenbauerToHermite_i2: return "gegenbauer-to-hermite";
    case LimitCaseId::LaguerreToHermite_i4: return "laguerre-to-hermite";
    case LimitCaseId::GegenbauerExact_s21: return "gegenbauer-exact-substitution";
    case LimitCaseId::MPtoLaguerre_lambdaHalf: return "mp-to-laguerre-lambda-half";
    case LimitCaseId::MPtoLaguerre_f8: return "mp-to-laguerre-substituted";
    case LimitCaseId::JacobiToLaguerre: return "jacobi-to-laguerre";
    case LimitCaseId::JacobiToLaguerre_Askey: return "jacobi-to-laguerre-askey";
    case LimitCaseId::MeixnerToLaguerre: return "meixner-to-laguerre";
  }
  return "?";
}

/// The limit parameter shrinks toward 0 (phi or 1-c) rather than growing.
inline bool limit_approaches_zero_param(LimitCaseId id) {
  return id == LimitCaseId::MPtoLaguerre_lambdaHalf || id == LimitCaseId::MPtoLaguerre_f8 ||
         id == LimitCaseId::MeixnerToLaguerre;
}

/// One limit relation with its target arguments. Hermite-direction cases
/// use `x`; Laguerre-direction cases use `xi` and `alpha`.
template <class R>
struct LimitCase {
  LimitCaseId id;
  int n = 3;
  R x = R(0);
  R xi = R(1);
  R alpha = R(0);
};

/// Per-case default grid, chosen so the error decays by well over three
/// orders of magnitude across the grid (the Laguerre-to-Hermite case only
/// decays like the inverse square root of its parameter, hence its longer
/// grid).
inline std::vector<double> default_grid(LimitCaseId id) {
  switch (id) {
    case LimitCaseId::LaguerreToHermite_i4:
      return geometric_grid(1e2, 10.0, 8);
    case LimitCaseId::MPtoLaguerre_lambdaHalf:
    case LimitCaseId::MPtoLaguerre_f8:
      return geometric_grid(1e-1, 0.1, 4);
    case LimitCaseId::MeixnerToLaguerre:
      return geometric_grid(1e-1, 0.1, 5);
    default:
      return geometric_grid(1e2, 10.0, 5);
  }
}

/// Generic study grids: 4 points, ratio 10 from 1e2 for large parameters;
/// 4 points, ratio 1/2 from 0.1 for phi -> 0 and (1-c) -> 0 studies.
inline std::vector<double> default_large_parameter_grid() { return geometric_grid(1e2, 10.0, 4); }
inline std::vector<double> default_small_parameter_grid() { return geometric_grid(0.1, 0.5, 4); }

/// |scaled polynomial - limit target| at one grid value, exactly per case.
template <class T>
real_of<T> limit_error(const LimitCase<real_of<T>>& lc, double param) {
  using R = real_of<T>;
  using std::sin, std::cos;
  const R p(param);
  switch (lc.id) {
    case LimitCaseId::GegenbauerToHermite_i2:
      return hermite_limit_error(HermiteLimitKind::GegenbauerI2, lc.n, T(lc.x), p);
    case LimitCaseId::LaguerreToHermite_i4:
      return hermite_limit_error(HermiteLimitKind::LaguerreI4, lc.n, T(lc.x), p);
    case LimitCaseId::GegenbauerExact_s21:
      return hermite_limit_error(HermiteLimitKind::GegenbauerExact, lc.n, T(lc.x), p);
    case LimitCaseId::MPtoLaguerre_lambdaHalf: {
      // lambda pinned to (alpha+1)/2; x from solving xi = A
      const R phi = p;
      const R lambda = (lc.alpha + R(1)) / R(2);
      const R x = ((lc.alpha + R(1)) * (R(1) - cos(phi)) - lc.xi) / (R(2) * sin(phi));
      T mp_val = recurrence::meixner_pollaczek(lc.n, lambda, phi, T(x));
      T lag = recurrence::laguerre(lc.n, T(lc.alpha), T(lc.xi));
      return abs_value(mp_val - lag);
    }
    case LimitCaseId::MPtoLaguerre_f8: {
      const R phi = p;
      auto [x, lambda] = mp_limit_substitution(lc.xi, lc.alpha, phi);
      T mp_val = recurrence::meixner_pollaczek(lc.n, lambda, phi, T(x));
      T lag = recurrence::laguerre(lc.n, T(lc.alpha), T(lc.xi));
      return abs_value(mp_val - lag);
    }
    case LimitCaseId::JacobiToLaguerre: {
      const R beta = p;
      const T x = T(R(1) - R(2) * lc.xi / (lc.alpha + beta + R(2)));
      T jac = recurrence::jacobi(lc.n, lc.alpha, beta, x);
      T lag = recurrence::laguerre(lc.n, T(lc.alpha), T(lc.xi));
      return abs_value(jac - lag);
    }
    case LimitCaseId::JacobiToLaguerre_Askey: {
      const R beta = p;
      const T x = T(R(1) - R(2) * lc.xi / beta);
      T jac = recurrence::jacobi(lc.n, lc.alpha, beta, x);
      T lag = recurrence::laguerre(lc.n, T(lc.alpha), T(lc.xi));
      return abs_value(jac - lag);
    }
    case LimitCaseId::MeixnerToLaguerre: {
      // param is 1-c; target is L_n^(alpha)(xi) / L_n^(alpha)(0)
      const R t = p;
      const R c = R(1) - t;
      const T x = T(c * lc.xi / t);
      T mei = recurrence::meixner(lc.n, lc.alpha + R(1), c, x);
      T lag = recurrence::laguerre(lc.n, T(lc.alpha), T(lc.xi));
      T lag0 = recurrence::laguerre(lc.n, T(lc.alpha), T(0));
      return abs_value(mei - lag / lag0);
    }
  }
  throw InvalidParameter("limit case: unknown");
}

/// Errors over the grid, fitted as a log-log slope. Points are recorded in
/// ascending parameter order; for the phi/(1-c) cases the limit direction
/// is descending, so expect positive slopes there.
template <class T>
OrderEstimate run_limit(const LimitCase<real_of<T>>& lc, const std::vector<double>& grid) {
  std::vector<std::pair<double, double>> points;
  points.reserve(grid.size());
  for (double p : grid) points.emplace_back(p, static_cast<double>(limit_error<T>(lc, p)));
  return estimate_order(points);
}

template <class T>
OrderEstimate run_limit(const LimitCase<real_of<T>>& lc) {
  return run_limit<T>(lc, default_grid(lc.id));
}

/// A truncation-order study: relative error of the upTo-term expansion
/// against the exact polynomial, as one family parameter grows with the
/// argument coupled to it the way each family's asymptotics demand
/// (MP: x + i lambda = param e^{i theta}; Jacobi/Meixner: beta = param with
/// x fixed; Krawtchouk: N = param with x/N fixed).
template <class R>
struct TruncationStudy {
  Family family = Family::MeixnerPollaczek;
  FreeParamMode mode = FreeParamMode::OneFree;
  int n = 4;
  int up_to = 0;
  R alpha = R(1);  // target Laguerre order where the mode fixes C
  R theta = R(1);  // MP
  R phi = R(1);    // MP
  R x_fixed = R(0);   // Jacobi, Meixner
  R meixner_c = R(0.5);
  R kraw_p = R(0.5);
  R kraw_s = R(0.3);  // x = s N
};

template <class T>
FamilySpec<T> study_spec_at(const TruncationStudy<real_of<T>>& st, double param) {
  using R = real_of<T>;
  using std::cos, std::sin;
  const R p(param);
  switch (st.family) {
    case Family::MeixnerPollaczek:
      return FamilySpec<T>::meixner_pollaczek(p * sin(st.theta), st.phi, T(p * cos(st.theta)));
    case Family::Jacobi:
      return FamilySpec<T>::jacobi(st.alpha, p, T(st.x_fixed));
    case Family::Meixner:
      return FamilySpec<T>::meixner(p, st.meixner_c, T(st.x_fixed));
    case Family::Krawtchouk: {
      const int N = static_cast<int>(param + 0.5);
      return FamilySpec<T>::krawtchouk(N, st.kraw_p, T(st.kraw_s * R(N)));
    }
    default:
      throw InvalidParameter("family: truncation studies cover the Laguerre-direction families");
  }
}

template <class T>
OrderEstimate truncation_error_order(const TruncationStudy<real_of<T>>& st, const std::vector<double>& grid) {
  std::vector<std::pair<double, double>> points;
  points.reserve(grid.size());
  for (double p : grid) {
    auto spec = study_spec_at<T>(st, p);
    auto plan = solve_plan(spec, st.mode, st.alpha, st.n);
    T exact = series_coefficient_oracle(spec, st.n);
    T approx = eval_laguerre_expansion(plan, st.n, st.up_to);
    auto rel = abs_value(exact - approx) / abs_value(exact);
    points.emplace_back(p, static_cast<double>(rel));
  }
  return estimate_order(points);
}

/// Per-index outcome of the coefficient growth law |c_k| = O(|mu|^floor(k/n)).
struct GrowthCheck {
  int k = 0;
  bool pass = false;
  bool both_below_threshold = false;
  double ratio = 0.0;
  double bound = 0.0;
};

/// Compare coefficient streams taken at mu and at sigma*mu: each ratio
/// |c_k(sigma mu)/c_k(mu)| must stay within sigma^floor(k/n) times the
/// slack; indices where both streams vanish count as passes.
template <class T>
std::vector<GrowthCheck> coefficient_growth_check(const std::vector<T>& at_mu, const std::vector<T>& at_sigma_mu,
                                                  int lead_power, double sigma, double slack) {
  using R = real_of<T>;
  if (lead_power < 1) throw InvalidParameter("lead power must be >= 1");
  if (!(sigma > 1.0)) throw InvalidParameter("sigma: must be > 1");
  const size_t m = (std::min)(at_mu.size(), at_sigma_mu.size());
  R max_lo(0), max_hi(0);
  for (size_t i = 0; i < m; ++i) {
    max_lo = (std::max)(max_lo, abs_value(at_mu[i]));
    max_hi = (std::max)(max_hi, abs_value(at_sigma_mu[i]));
  }
  const R thr_lo = pow10<R>(6 - working_digits<T>()) * (std::max)(R(1), max_lo);
  const R thr_hi = pow10<R>(6 - working_digits<T>()) * (std::max)(R(1), max_hi);
  std::vector<GrowthCheck> out;
  out.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    GrowthCheck g;
    g.k = static_cast<int>(i);
    g.bound = std::pow(sigma, static_cast<double>(g.k / lead_power)) * slack;
    const R lo = abs_value(at_mu[i]), hi = abs_value(at_sigma_mu[i]);
    if (lo <= thr_lo && hi <= thr_hi) {
      g.both_below_threshold = true;
      g.pass = true;
    } else if (lo <= thr_lo) {
      g.pass = false;
      g.ratio = std::numeric_limits<double>::infinity();
    } else {
      g.ratio = static_cast<double>(hi / lo);
      g.pass = g.ratio <= g.bound;
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace askey

#endif  // ASKEY_LAB_HPP
