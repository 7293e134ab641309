#ifndef ASKEY_FAMILIES_HPP
#define ASKEY_FAMILIES_HPP

// Polynomial families defined by their generating functions, each evaluable
// by two independent routes: coefficient extraction from the generating
// series (via the series engine) and the classical three-term recurrence
// (recurrences.hpp). Either route can serve as the other's oracle.

#include <string>
#include <utility>

#include "askey/errors.hpp"
#include "askey/precision.hpp"
#include "askey/recurrences.hpp"
#include "askey/series.hpp"

namespace askey {

enum class Family { Hermite, Laguerre, Ultraspherical, Jacobi, MeixnerPollaczek, Meixner, Krawtchouk };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Hermite: return "hermite";
    case Family::Laguerre: return "laguerre";
    case Family::Ultraspherical: return "ultraspherical";
    case Family::Jacobi: return "jacobi";
    case Family::MeixnerPollaczek: return "meixner-pollaczek";
    case Family::Meixner: return "meixner";
    case Family::Krawtchouk: return "krawtchouk";
  }
  return "?";
}

/// A family identifier plus its parameters and the (complex) argument x.
/// Only the fields relevant to `family` are meaningful; use the named
/// constructors. Parameter validity is checked on construction.
template <class T>
struct FamilySpec {
  using R = real_of<T>;

  Family family = Family::Hermite;
  T x = T(0);
  R gamma = R(0);   // ultraspherical
  R alpha = R(0);   // laguerre, jacobi
  R beta = R(0);    // jacobi, meixner
  R lambda = R(0);  // meixner-pollaczek
  R phi = R(0);     // meixner-pollaczek
  R c = R(0);       // meixner
  R p = R(0);       // krawtchouk
  int N = 0;        // krawtchouk

  R q() const { return (R(1) - p) / p; }  // krawtchouk companion parameter

  static FamilySpec hermite(T x) { return checked({Family::Hermite, std::move(x)}); }

  static FamilySpec laguerre(R alpha, T x) {
    FamilySpec s{Family::Laguerre, std::move(x)};
    s.alpha = std::move(alpha);
    return checked(std::move(s));
  }

  static FamilySpec ultraspherical(R gamma, T x) {
    FamilySpec s{Family::Ultraspherical, std::move(x)};
    s.gamma = std::move(gamma);
    return checked(std::move(s));
  }

  static FamilySpec jacobi(R alpha, R beta, T x) {
    FamilySpec s{Family::Jacobi, std::move(x)};
    s.alpha = std::move(alpha);
    s.beta = std::move(beta);
    return checked(std::move(s));
  }

  static FamilySpec meixner_pollaczek(R lambda, R phi, T x) {
    FamilySpec s{Family::MeixnerPollaczek, std::move(x)};
    s.lambda = std::move(lambda);
    s.phi = std::move(phi);
    return checked(std::move(s));
  }

  static FamilySpec meixner(R beta, R c, T x) {
    FamilySpec s{Family::Meixner, std::move(x)};
    s.beta = std::move(beta);
    s.c = std::move(c);
    return checked(std::move(s));
  }

  static FamilySpec krawtchouk(int N, R p, T x) {
    FamilySpec s{Family::Krawtchouk, std::move(x)};
    s.N = N;
    s.p = std::move(p);
    return checked(std::move(s));
  }

  void validate() const {
    switch (family) {
      case Family::MeixnerPollaczek:
        if (!(lambda > R(0))) throw InvalidParameter("lambda: must be > 0");
        if (!(phi > R(0) && phi < pi_value<T>())) throw InvalidParameter("phi: must be in (0, pi)");
        break;
      case Family::Meixner:
        if (!(c > R(0) && c < R(1))) throw InvalidParameter("c: must be in (0,1)");
        if (!(beta > R(0))) throw InvalidParameter("beta: must be > 0");
        break;
      case Family::Krawtchouk:
        if (!(p > R(0) && p < R(1))) throw InvalidParameter("p: must be in (0,1)");
        if (N < 1) throw InvalidParameter("N: must be a positive integer");
        break;
      default:
        break;  // remaining families are unconstrained as formal series
    }
  }

 private:
  static FamilySpec checked(FamilySpec s) {
    s.validate();
    return s;
  }
};

// small numeric helpers shared by normalization tags and tests

template <class R>
R factorial_value(int n) {
  R r(1);
  for (int k = 2; k <= n; ++k) r *= R(k);
  return r;
}

template <class R>
R pochhammer(const R& a, int n) {
  R r(1);
  for (int k = 0; k < n; ++k) r *= a + R(k);
  return r;
}

template <class R>
R binomial_value(int n, int k) {
  if (k < 0 || k > n) return R(0);
  R r(1);
  for (int j = 1; j <= k; ++j) r = r * R(n - k + j) / R(j);
  return r;
}

namespace detail {

/// c0 + c1 w as an order-K series.
template <class T>
TruncatedSeries<T> linear_series(const T& c0, const T& c1, int K) {
  auto s = TruncatedSeries<T>::monomial(1, c1, K);
  std::vector<T> c(s.coeffs());
  c[0] = c0;
  return TruncatedSeries<T>(std::move(c));
}

/// w / (c0 + c1 w) as an order-K series (zero constant term, exactly).
template <class T>
TruncatedSeries<T> w_over_linear(const T& c0, const T& c1, int K) {
  auto inv = inverse(linear_series(c0, c1, K));
  // multiply by w as an index shift so the constant term stays an exact zero
  std::vector<T> c(static_cast<size_t>(K) + 1, T(0));
  for (int k = 1; k <= K; ++k) c[static_cast<size_t>(k)] = inv[k - 1];
  return TruncatedSeries<T>(std::move(c));
}

}  // namespace detail

/// Laguerre generating series (1-w)^(-a-1) exp(-x w/(1-w)) for arbitrary
/// complex order a; coefficient of w^n is L_n^(a)(x).
template <class T>
TruncatedSeries<T> laguerre_generating_series(const T& a, const T& x, int K) {
  auto pre = pow_general(detail::linear_series(T(1), T(-1), K), -a - T(1));
  auto expo = exp_series(-x * detail::w_over_linear(T(1), T(-1), K));
  return pre * expo;
}

/// Alternating Laguerre form (1+w)^(-a-1) exp(x w/(1+w)); coefficient of
/// w^n is (-1)^n L_n^(a)(x). This is the form the Hermite-type expansion
/// machinery consumes; mixing it with the plain form silently flips signs.
template <class T>
TruncatedSeries<T> laguerre_alternating_series(const real_of<T>& a, const T& x, int K) {
  auto pre = pow_general(detail::linear_series(T(1), T(1), K), T(-a - real_of<T>(1)));
  auto expo = exp_series(x * detail::w_over_linear(T(1), T(1), K));
  return pre * expo;
}

/// The family's generating series F(x,w) to order K. coeffs[0] == 1 for
/// every family (p_0 = 1).
template <class T>
TruncatedSeries<T> generating_series(const FamilySpec<T>& spec, int K) {
  using R = real_of<T>;
  spec.validate();
  if (K < 0) throw InvalidParameter("order: must be >= 0");
  const T one_c(1);
  switch (spec.family) {
    case Family::Hermite: {
      // exp(2xw - w^2) = sum H_n(x)/n! w^n
      auto e = TruncatedSeries<T>::monomial(1, R(2) * spec.x, K) + TruncatedSeries<T>::monomial(2, T(-1), K);
      return exp_series(e);
    }
    case Family::Laguerre:
      return laguerre_generating_series(T(spec.alpha), spec.x, K);
    case Family::Ultraspherical: {
      // (1 - 2xw + w^2)^(-gamma) = sum C_n^gamma(x) w^n
      auto quad = detail::linear_series(one_c, R(-2) * spec.x, K) + TruncatedSeries<T>::monomial(2, T(1), K);
      return pow_general(quad, T(-spec.gamma));
    }
    case Family::Jacobi: {
      // 2^(a+b) (1+R-w)^(-a) (1+R+w)^(-b) / R,  R = sqrt(1-2xw+w^2)
      auto quad = detail::linear_series(one_c, R(-2) * spec.x, K) + TruncatedSeries<T>::monomial(2, T(1), K);
      auto Rs = pow_general(quad, T(R(1) / R(2)));
      auto w = TruncatedSeries<T>::monomial(1, T(1), K);
      auto onep = TruncatedSeries<T>::one(K) + Rs;
      using std::pow;
      T scale = T(pow(R(2), spec.alpha + spec.beta));
      return scale * (pow_general(onep - w, T(-spec.alpha)) * pow_general(onep + w, T(-spec.beta)) * inverse(Rs));
    }
    case Family::MeixnerPollaczek: {
      // (1 - e^{i phi} w)^(-lambda+ix) (1 - e^{-i phi} w)^(-lambda-ix)
      using std::cos, std::sin;
      const T i_unit = complex_traits<T>::make(R(0), R(1));
      const T eip = complex_traits<T>::make(cos(spec.phi), sin(spec.phi));
      const T eim = complex_traits<T>::make(cos(spec.phi), -sin(spec.phi));
      auto f1 = pow_general(detail::linear_series(one_c, -eip, K), T(-spec.lambda) + i_unit * spec.x);
      auto f2 = pow_general(detail::linear_series(one_c, -eim, K), T(-spec.lambda) - i_unit * spec.x);
      return f1 * f2;
    }
    case Family::Meixner: {
      // (1 - w/c)^x (1-w)^(-beta-x) = sum (beta)_n/n! M_n(x;beta,c) w^n
      auto f1 = pow_general(detail::linear_series(one_c, T(R(-1) / spec.c), K), spec.x);
      auto f2 = pow_general(detail::linear_series(one_c, T(-1), K), T(-spec.beta) - spec.x);
      return f1 * f2;
    }
    case Family::Krawtchouk: {
      // (1 - qw)^x (1+w)^(N-x) = sum_{n<=N} C(N,n) K_n(x;p,N) w^n
      auto f1 = pow_general(detail::linear_series(one_c, T(-spec.q()), K), spec.x);
      auto f2 = pow_general(detail::linear_series(one_c, T(1), K), T(R(spec.N)) - spec.x);
      return f1 * f2;
    }
  }
  throw InvalidParameter("family: unknown");
}

/// The generating-series form consumed by the Hermite-type expansion: the
/// alternating form for Laguerre, the canonical form for everything else.
template <class T>
TruncatedSeries<T> generating_series_hermite_route(const FamilySpec<T>& spec, int K) {
  if (spec.family == Family::Laguerre) return laguerre_alternating_series<T>(spec.alpha, spec.x, K);
  return generating_series(spec, K);
}

/// Factor between the standard polynomial value and the series coefficient:
/// seriesCoefficient(n) == tag(n) * standardValue(n).
template <class T>
real_of<T> series_normalization_tag(const FamilySpec<T>& spec, int n) {
  using R = real_of<T>;
  switch (spec.family) {
    case Family::Hermite: return R(1) / factorial_value<R>(n);
    case Family::Meixner: return pochhammer(spec.beta, n) / factorial_value<R>(n);
    case Family::Krawtchouk: return binomial_value<R>(spec.N, n);
    default: return R(1);
  }
}

template <class T>
void check_degree(const FamilySpec<T>& spec, int n) {
  if (n < 0) throw DegreeOutOfRange("degree must be >= 0");
  if (spec.family == Family::Krawtchouk && n > spec.N)
    throw DegreeOutOfRange("degree exceeds N for the Krawtchouk family");
}

/// Coefficient of w^n of the generating series (series-engine route).
template <class T>
T series_coefficient(const FamilySpec<T>& spec, int n) {
  check_degree(spec, n);
  return generating_series(spec, n)[n];
}

/// Standard-normalization value via the series route.
template <class T>
T eval_standard(const FamilySpec<T>& spec, int n) {
  return series_coefficient(spec, n) / series_normalization_tag(spec, n);
}

/// Standard-normalization value via the classical recurrence route.
template <class T>
T eval_recurrence(const FamilySpec<T>& spec, int n) {
  spec.validate();
  check_degree(spec, n);
  switch (spec.family) {
    case Family::Hermite: return recurrence::hermite(n, spec.x);
    case Family::Laguerre: return recurrence::laguerre(n, T(spec.alpha), spec.x);
    case Family::Ultraspherical: return recurrence::ultraspherical(n, spec.gamma, spec.x);
    case Family::Jacobi: return recurrence::jacobi(n, spec.alpha, spec.beta, spec.x);
    case Family::MeixnerPollaczek: return recurrence::meixner_pollaczek(n, spec.lambda, spec.phi, spec.x);
    case Family::Meixner: return recurrence::meixner(n, spec.beta, spec.c, spec.x);
    case Family::Krawtchouk: return recurrence::krawtchouk(n, spec.p, spec.N, spec.x);
  }
  throw InvalidParameter("family: unknown");
}

/// Series coefficient rebuilt from the recurrence route; the independent
/// oracle for everything the series engine produces.
template <class T>
T series_coefficient_oracle(const FamilySpec<T>& spec, int n) {
  return series_normalization_tag(spec, n) * eval_recurrence(spec, n);
}

/// Target coefficient for the Hermite-route series: (-1)^n L_n for the
/// alternating Laguerre form, the plain series coefficient otherwise.
template <class T>
T hermite_route_coefficient_oracle(const FamilySpec<T>& spec, int n) {
  T v = series_coefficient_oracle(spec, n);
  if (spec.family == Family::Laguerre && (n % 2) == 1) return -v;
  return v;
}

/// Polar coordinates for the Meixner-Pollaczek argument pair:
/// x + i lambda = r e^{i theta}.
template <class R>
struct PolarMP {
  R r = R(0);
  R theta = R(0);
};

template <class R>
std::pair<R, R> polar_to_mp(const PolarMP<R>& pm) {
  using std::cos, std::sin, std::acos;
  if (!(pm.r >= R(0))) throw InvalidParameter("r: must be >= 0");
  if (!(pm.theta >= R(0) && pm.theta <= acos(R(-1)))) throw InvalidParameter("theta: must be in [0, pi]");
  return {pm.r * cos(pm.theta), pm.r * sin(pm.theta)};
}

template <class R>
PolarMP<R> mp_to_polar(const R& x, const R& lambda) {
  using std::atan2, std::hypot;
  return PolarMP<R>{hypot(x, lambda), atan2(lambda, x)};
}

}  // namespace askey

#endif  // ASKEY_FAMILIES_HPP
