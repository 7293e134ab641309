#ifndef ASKEY_LAGUERRE_HPP
#define ASKEY_LAGUERRE_HPP

// Laguerre-type finite expansion: write the generating series as
//   F(x,w) = e^{Aw/(Bw-1)} (1-Bw)^{-C-1} f(x,w),
//   f(x,w) = e^{Aw/(1-Bw)} (1-Bw)^{C+1} F(x,w) = sum c_k w^k,
// and then
//   p_n(x) = sum_{k=0}^n B^{n-k} c_k L_{n-k}^{(C)}(xi),  xi = A/B,
// exactly. A, B, C are free: annihilating c_1 (one free parameter),
// c_1, c_2 (two) or c_1, c_2, c_3 (three) raises the asymptotic order of
// the first-term approximation by one step each.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "askey/errors.hpp"
#include "askey/families.hpp"
#include "askey/series.hpp"

namespace askey {

/// Which coefficients the solve annihilates, and with which parameters:
///  - OneFree:   c1 = 0 solved for A               (B = 1, C = alpha)
///  - TwoFreeAB: c1 = c2 = 0 solved for A and B    (C = alpha)
///  - TwoFreeAC: c1 = c2 = 0 solved for A and C    (B = 1)
///  - ThreeFree: c1 = c2 = c3 = 0 solved for A, B, C
enum class FreeParamMode { OneFree, TwoFreeAB, TwoFreeAC, ThreeFree };

inline const char* mode_name(FreeParamMode m) {
  switch (m) {
    case FreeParamMode::OneFree: return "onefree";
    case FreeParamMode::TwoFreeAB: return "twofree-ab";
    case FreeParamMode::TwoFreeAC: return "twofree-ac";
    case FreeParamMode::ThreeFree: return "threefree";
  }
  return "?";
}

template <class T>
struct LaguerrePlan {
  T A = T(0);
  T B = T(1);
  T C = T(0);   // Laguerre order of the expansion (may depend on x)
  T xi = T(0);  // A / B
  std::vector<T> c;
  FreeParamMode mode = FreeParamMode::OneFree;
  bool complex_sqrt_domain = false;  // set when the TwoFreeAB discriminant is negative
};

namespace detail {

/// Expansion coefficients of f = e^{Aw/(1-Bw)} (1-Bw)^{C+1} F to order K.
/// The exponent is assembled through the series engine (division, then
/// exp_series); the printed per-family recursions are test data, not code.
template <class T>
std::vector<T> laguerre_expansion_coeffs(const TruncatedSeries<T>& F, const T& A, const T& B, const T& C,
                                         int K) {
  const int order = (std::min)(K, F.order());
  auto one_minus_bw = linear_series(T(1), -B, order);
  auto expo = exp_series(A * w_over_linear(T(1), -B, order));
  auto f = expo * pow_general(one_minus_bw, C + T(1)) * F.truncated(order);
  return f.coeffs();
}

template <class T>
void require_nonzero_b(const T& B) {
  using R = real_of<T>;
  if (abs_value(B) <= pow10<R>(6 - working_digits<T>()))
    throw ZeroB("expansion scale B vanishes");
}

}  // namespace detail

template <class T>
void solve_three_free(const FamilySpec<T>& spec, const TruncatedSeries<T>& F, const T& p1, const T& p2,
                      const T& p3, LaguerrePlan<T>& plan);

/// Solve the mode's equations for the free parameters and compute c_0..c_K.
/// `alpha` is the target Laguerre order where the mode fixes C; it is
/// ignored for TwoFreeAC and ThreeFree which solve for C.
template <class T>
LaguerrePlan<T> solve_plan(const FamilySpec<T>& spec, FreeParamMode mode, const real_of<T>& alpha, int K) {
  using R = real_of<T>;
  if (K < 0) throw InvalidParameter("K: must be >= 0");
  const int order = (std::max)(K, 4);
  auto F = generating_series(spec, order);
  const T p1 = F[1], p2 = F[2], p3 = F[3];

  LaguerrePlan<T> plan;
  plan.mode = mode;
  switch (mode) {
    case FreeParamMode::OneFree: {
      plan.B = T(1);
      plan.C = T(alpha);
      plan.A = plan.B * (plan.C + T(1)) - p1;
      break;
    }
    case FreeParamMode::TwoFreeAB: {
      if (abs_value(T(alpha) + T(1)) <= pow10<R>(6 - working_digits<T>()))
        throw ZeroB("alpha = -1 makes B undefined in the two-free-parameter solve");
      plan.C = T(alpha);
      const T disc = p1 * p1 - (plan.C + T(1)) * (R(2) * p2 - p1 * p1);
      using std::sqrt, std::abs;
      plan.A = sqrt(disc);
      plan.complex_sqrt_domain =
          real(disc) < R(0) && abs(imag(disc)) <= pow10<R>(6 - working_digits<T>()) * abs_value(disc);
      plan.B = (p1 + plan.A) / (plan.C + T(1));
      detail::require_nonzero_b(plan.B);
      break;
    }
    case FreeParamMode::TwoFreeAC: {
      // c1 = c2 = 0 with B = 1: C = p1^2 + 2 p1 - 2 p2 - 1, A = p1^2 + p1 - 2 p2
      plan.B = T(1);
      plan.C = p1 * p1 + R(2) * p1 - R(2) * p2 - T(1);
      plan.A = p1 * p1 + p1 - R(2) * p2;
      break;
    }
    case FreeParamMode::ThreeFree: {
      solve_three_free(spec, F, p1, p2, p3, plan);
      break;
    }
  }
  plan.xi = plan.A / plan.B;
  auto c = detail::laguerre_expansion_coeffs(F, plan.A, plan.B, plan.C, order);
  plan.c.assign(c.begin(), c.begin() + K + 1);
  return plan;
}

/// The B-quadratic left after substituting the c1 = c2 = 0 solutions into
/// c3: (p1/3) B^2 + (2/3)(p1^2 - 2 p2) B + (p3 - p1 p2 + p1^3/3) = 0.
template <class T>
std::vector<T> three_free_b_candidates(const T& p1, const T& p2, const T& p3) {
  using R = real_of<T>;
  const R tiny = pow10<R>(6 - working_digits<T>());
  const T qa = p1 / R(3);
  const T qb = (R(2) * p1 * p1 - R(4) * p2) / R(3);
  const T qc = p3 - p1 * p2 + p1 * p1 * p1 / R(3);
  const R scale = (std::max)({abs_value(qa), abs_value(qb), abs_value(qc), R(1)});
  if (abs_value(qa) <= tiny * scale) {
    if (abs_value(qb) <= tiny * scale) {
      if (abs_value(qc) <= tiny * scale)
        throw DegenerateQuadratic("every B annihilates c3; the quadratic is identically zero");
      throw QuadraticNoRoot("the B-quadratic degenerates to a contradiction");
    }
    return {-qc / qb};
  }
  using std::sqrt;
  const T d = sqrt(qb * qb - R(4) * qa * qc);
  return {(-qb + d) / (R(2) * qa), (-qb - d) / (R(2) * qa)};
}

namespace detail {

/// c4 of the expansion for a candidate (A,B,C); used to rank quadratic roots.
template <class T>
T c4_for(const TruncatedSeries<T>& F, const T& A, const T& B, const T& C) {
  return laguerre_expansion_coeffs(F, A, B, C, 4)[4];
}

}  // namespace detail

template <class T>
void solve_three_free(const FamilySpec<T>& spec, const TruncatedSeries<T>& F, const T& p1, const T& p2,
                      const T& p3, LaguerrePlan<T>& plan) {
  using R = real_of<T>;
  using std::sin, std::cos, std::atan2, std::hypot, std::abs;
  const R tiny = pow10<R>(6 - working_digits<T>());

  if (spec.family == Family::MeixnerPollaczek && abs(imag(spec.x)) <= tiny) {
    // closed forms in polar coordinates x + i lambda = r e^{i theta}
    const R xr = real(spec.x);
    const R r = hypot(xr, spec.lambda);
    const R theta = atan2(spec.lambda, xr);
    const R s_num = sin((theta + R(3) * spec.phi) / R(2));
    const R s_den = sin((theta + spec.phi) / R(2));
    if (abs(s_num) <= tiny || abs(s_den) <= tiny)
      throw ZeroB("three-free closed forms degenerate at this (theta, phi)");
    plan.B = T(s_num / s_den);
    plan.A = T(R(2) * r * sin(spec.phi) * s_den / s_num);
    plan.C = T(R(2) * r * (sin(theta + R(2) * spec.phi) + R(2) * sin(spec.phi))) / (plan.B * plan.B) - T(1);
    // the closed-form B must be a root of the general quadratic
    const T qa = p1 / R(3);
    const T qb = (R(2) * p1 * p1 - R(4) * p2) / R(3);
    const T qc = p3 - p1 * p2 + p1 * p1 * p1 / R(3);
    const T resid = qa * plan.B * plan.B + qb * plan.B + qc;
    const R scale = abs_value(qa * plan.B * plan.B) + abs_value(qb * plan.B) + abs_value(qc) + R(1);
    if (abs_value(resid) > pow10<R>(10 - working_digits<T>()) * scale)
      throw Error("three-free closed forms do not satisfy the B-quadratic");
    return;
  }

  auto candidates = three_free_b_candidates(p1, p2, p3);
  bool have = false;
  T best_b(0), best_c4(0);
  R best_abs(0);
  for (const T& b : candidates) {
    if (abs_value(b) <= tiny) continue;
    const T cc = (p1 * p1 - R(2) * p2 + R(2) * p1 * b - b * b) / (b * b);
    const T aa = b * (cc + T(1)) - p1;
    const T c4 = detail::c4_for(F, aa, b, cc);
    const R a4 = abs_value(c4);
    // smallest |c4| wins; near-ties go to the larger Re(B)
    const bool better =
        !have || a4 < best_abs * (R(1) - tiny) ||
        (a4 <= best_abs * (R(1) + tiny) && real(b) > real(best_b));
    if (better) {
      have = true;
      best_b = b;
      best_c4 = c4;
      best_abs = a4;
    }
  }
  if (!have) throw ZeroB("both roots of the B-quadratic vanish");
  plan.B = best_b;
  plan.C = (p1 * p1 - R(2) * p2 + R(2) * p1 * plan.B - plan.B * plan.B) / (plan.B * plan.B);
  plan.A = plan.B * (plan.C + T(1)) - p1;
  (void)best_c4;
}

/// sum_{k=0}^{upTo} B^{n-k} c_k L_{n-k}^{(C)}(xi). The Laguerre values are
/// extracted from (1-w)^{-C-1} e^{-w xi/(1-w)}, which needs no restriction
/// on the (generally complex, x-dependent) order C. With upTo = n this is
/// the exact series coefficient; below n it is the asymptotic approximant.
template <class T>
T eval_laguerre_expansion(const LaguerrePlan<T>& plan, int n, int up_to) {
  if (up_to < 0 || up_to > n) throw TruncationOutOfRange("upTo must satisfy 0 <= upTo <= n");
  if (static_cast<int>(plan.c.size()) <= up_to)
    throw TruncationOutOfRange("plan does not carry enough coefficients");
  auto lag = laguerre_generating_series(plan.C, plan.xi, n);
  T sum(0);
  T bpow(1);  // B^{n-k}, built from k = n downward
  for (int k = n; k >= 0; --k) {
    if (k <= up_to) sum += bpow * plan.c[static_cast<size_t>(k)] * lag[n - k];
    bpow *= plan.B;
  }
  return sum;
}

/// Context of the one-free-parameter Meixner-Pollaczek expansion, the only
/// case with a printed coefficient recursion.
template <class T>
struct MPOneFreeContext {
  real_of<T> alpha;
  real_of<T> lambda;
  real_of<T> phi;
  T x;
};

/// c_{k+1} from c_0..c_k via the printed four-term recursion; negative
/// indices count as zero. No cross-check (see mp_coefficient_recursion).
template <class T>
T mp_recursion_step(const MPOneFreeContext<T>& ctx, const std::vector<T>& c, int k) {
  using R = real_of<T>;
  using std::cos, std::sin;
  if (k < 0 || static_cast<int>(c.size()) <= k) throw InvalidParameter("k: need c_0..c_k");
  const R cp = cos(ctx.phi), sp = sin(ctx.phi);
  auto at = [&](int i) { return i >= 0 ? c[static_cast<size_t>(i)] : T(0); };
  const T s = T(ctx.lambda * cp) + ctx.x * sp;  // lambda cos(phi) + x sin(phi)
  const T t1 = T(R(2) * (R(1) + cp) * R(k));
  const T t2 = T(ctx.alpha + R(1) - R(2) * ctx.lambda) + R(4) * (cp - R(1)) * s +
               T(R(2) * (R(1) - R(k)) * (R(1) + R(2) * cp));
  const T t3 = T(R(4) * ctx.lambda + R(2) * (R(1) + cp) * (R(k) - R(2)) - R(2) * (ctx.alpha + R(1)) * cp);
  const T t4 = T(ctx.alpha + R(4) - R(k) - R(2) * ctx.lambda);
  return (t1 * at(k) + t2 * at(k - 1) + t3 * at(k - 2) + t4 * at(k - 3)) / R(k + 1);
}

/// c_{k+1} per the printed recursion, cross-checked against the series
/// engine. A disagreement beyond tolerance raises RecursionMismatch naming
/// the offending index -- it is surfaced, never silently patched.
template <class T>
T mp_coefficient_recursion(const MPOneFreeContext<T>& ctx, const std::vector<T>& c, int k) {
  using R = real_of<T>;
  const T rec = mp_recursion_step(ctx, c, k);
  auto spec = FamilySpec<T>::meixner_pollaczek(ctx.lambda, ctx.phi, ctx.x);
  auto plan = solve_plan(spec, FreeParamMode::OneFree, ctx.alpha, k + 1);
  const T eng = plan.c[static_cast<size_t>(k + 1)];
  const R scale = (std::max)(abs_value(eng), R(1));
  if (abs_value(rec - eng) > pow10<R>(20 - working_digits<T>()) * scale) {
    throw RecursionMismatch(k + 1, "printed recursion and series engine disagree at k = " +
                                       std::to_string(k + 1));
  }
  return rec;
}

/// Invert A = xi, C = alpha of the two-free-parameter (A,C) solve back to
/// the polynomial arguments.
template <class R>
std::pair<R, R> mp_limit_substitution(const R& xi, const R& alpha, const R& phi) {
  using std::sin, std::cos, std::abs;
  const R sp = sin(phi);
  if (abs(sp) <= pow10<R>(-12)) throw SinPhiZero("sin(phi) vanishes");
  const R cp = cos(phi);
  const R lambda = (R(1) - cp) * xi + (alpha + R(1)) * (R(2) * cp - R(1)) / R(2);
  const R x = (R(2) * (xi - alpha - R(1)) * cp * cp + (alpha + R(1) - R(2) * xi) * cp + alpha + R(1) - xi) /
              (R(2) * sp);
  return {x, lambda};
}

}  // namespace askey

#endif  // ASKEY_LAGUERRE_HPP
