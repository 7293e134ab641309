#ifndef ASKEY_SERIES_HPP
#define ASKEY_SERIES_HPP

// Truncated formal power series over complex coefficients. This is the
// engine that extracts polynomial values and expansion coefficients from
// generating functions; all higher modules sit on top of it.

#include <algorithm>
#include <utility>
#include <vector>

#include "askey/errors.hpp"
#include "askey/precision.hpp"

namespace askey {

template <class T>
class TruncatedSeries {
 public:
  using real_type = real_of<T>;

  explicit TruncatedSeries(std::vector<T> coeffs)
      : coeffs_(std::move(coeffs)), precision_(working_digits<T>()) {
    if (coeffs_.empty()) throw InvalidParameter("series needs at least the constant coefficient");
    for (const T& c : coeffs_)
      if (!finite(c)) throw NonfiniteCoefficient("series coefficient is not finite");
  }

  static TruncatedSeries zero(int order) {
    return TruncatedSeries(std::vector<T>(static_cast<size_t>(order) + 1, T(0)));
  }

  static TruncatedSeries one(int order) {
    auto s = zero(order);
    s.coeffs_[0] = T(1);
    return s;
  }

  /// value * w^k, truncated at `order`.
  static TruncatedSeries monomial(int k, const T& value, int order) {
    auto s = zero(order);
    if (k >= 0 && k <= order) s.coeffs_[static_cast<size_t>(k)] = value;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  int precision() const { return precision_; }

  const T& operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }

  T coeff_or_zero(int k) const {
    return (k >= 0 && k <= order()) ? coeffs_[static_cast<size_t>(k)] : T(0);
  }

  const std::vector<T>& coeffs() const { return coeffs_; }

  real_type max_abs() const {
    real_type m(0);
    for (const T& c : coeffs_) m = (std::max)(m, abs_value(c));
    return m;
  }

  TruncatedSeries truncated(int new_order) const {
    if (new_order >= order()) return *this;
    std::vector<T> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return TruncatedSeries(std::move(c));
  }

 private:
  std::vector<T> coeffs_;
  int precision_;
};

/// Scale-aware zero threshold: |c| at or below this counts as a vanished
/// coefficient of `s`.
template <class T>
real_of<T> zero_threshold(const TruncatedSeries<T>& s) {
  using R = real_of<T>;
  R scale = (std::max)(R(1), s.max_abs());
  return pow10<R>(6 - s.precision()) * scale;
}

template <class T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const int n = (std::min)(a.order(), b.order());
  std::vector<T> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a[k] + b[k];
  return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const int n = (std::min)(a.order(), b.order());
  std::vector<T> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a[k] - b[k];
  return TruncatedSeries<T>(std::move(c));
}

/// Cauchy product truncated to the smaller order.
template <class T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const int n = (std::min)(a.order(), b.order());
  std::vector<T> c(static_cast<size_t>(n) + 1, T(0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j) c[static_cast<size_t>(i + j)] += a[i] * b[j];
  return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> operator*(const T& s, const TruncatedSeries<T>& a) {
  std::vector<T> c(a.coeffs());
  for (T& x : c) x = s * x;
  return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a) {
  return T(-1) * a;
}

/// exp of a series with vanishing constant term, via the first-order
/// recurrence from (exp a)' = a' exp a:  k b_k = sum_{j=1..k} j a_j b_{k-j}.
template <class T>
TruncatedSeries<T> exp_series(const TruncatedSeries<T>& a) {
  if (a[0] != T(0)) throw NonzeroConstantTerm("exp_series needs a zero constant term");
  const int n = a.order();
  std::vector<T> b(static_cast<size_t>(n) + 1, T(0));
  b[0] = T(1);
  for (int k = 1; k <= n; ++k) {
    T acc(0);
    for (int j = 1; j <= k; ++j) acc += real_of<T>(j) * a[j] * b[static_cast<size_t>(k - j)];
    b[static_cast<size_t>(k)] = acc / real_of<T>(k);
  }
  return TruncatedSeries<T>(std::move(b));
}

/// Series logarithm of a series with unit constant term:
/// k c_k = k a_k - sum_{j=1..k-1} j c_j a_{k-j}.
template <class T>
TruncatedSeries<T> log_series(const TruncatedSeries<T>& a) {
  if (a[0] != T(1)) throw NonunitConstantTerm("log_series needs a unit constant term");
  const int n = a.order();
  std::vector<T> c(static_cast<size_t>(n) + 1, T(0));
  for (int k = 1; k <= n; ++k) {
    T acc = real_of<T>(k) * a[k];
    for (int j = 1; j < k; ++j) acc -= real_of<T>(j) * c[static_cast<size_t>(j)] * a[k - j];
    c[static_cast<size_t>(k)] = acc / real_of<T>(k);
  }
  return TruncatedSeries<T>(std::move(c));
}

/// a^s for complex exponent s: c0^s * exp(s * log(a/c0)), principal branch
/// of c0^s. Division of the whole library routes through this with s = -1.
template <class T>
TruncatedSeries<T> pow_general(const TruncatedSeries<T>& a, const T& s) {
  const T c0 = a[0];
  if (c0 == T(0)) throw ZeroConstantTerm("pow_general needs a nonzero constant term");
  std::vector<T> scaled(a.coeffs());
  for (T& x : scaled) x = x / c0;
  scaled[0] = T(1);  // exact by construction
  TruncatedSeries<T> unit(std::move(scaled));
  TruncatedSeries<T> body = exp_series(s * log_series(unit));
  using std::pow;
  return pow(c0, s) * body;
}

template <class T>
TruncatedSeries<T> inverse(const TruncatedSeries<T>& a) {
  return pow_general(a, T(-1));
}

/// mu * w^n * (a0 + a1 w + ...), the factored view of a series whose leading
/// coefficients vanish. assemble() reproduces the original coefficientwise.
template <class T>
struct ScaledForm {
  int lead_power = 1;
  T scale = T(1);
  TruncatedSeries<T> tail = TruncatedSeries<T>::one(0);

  TruncatedSeries<T> assemble() const {
    const int n = lead_power + tail.order();
    std::vector<T> c(static_cast<size_t>(n) + 1, T(0));
    for (int k = 0; k <= tail.order(); ++k)
      c[static_cast<size_t>(lead_power + k)] = scale * tail[k];
    return TruncatedSeries<T>(std::move(c));
  }
};

/// Factor a series with zero constant term as mu * w^n * (a0 + ...). The
/// caller supplies which parameter plays mu's role; the lead power is the
/// first coefficient above the zero threshold.
template <class T>
ScaledForm<T> decompose_scaled(const TruncatedSeries<T>& a, const T& scale_param) {
  if (a[0] != T(0)) throw NonzeroConstantTerm("decompose_scaled needs a zero constant term");
  if (scale_param == T(0)) throw InvalidParameter("decompose_scaled: scale parameter must be nonzero");
  const auto thr = zero_threshold(a);
  int lead = -1;
  for (int k = 1; k <= a.order(); ++k) {
    if (abs_value(a[k]) > thr) {
      lead = k;
      break;
    }
  }
  if (lead < 0) throw ZeroSeries("decompose_scaled: series vanishes to working precision");
  std::vector<T> tail(static_cast<size_t>(a.order() - lead) + 1);
  for (int k = lead; k <= a.order(); ++k)
    tail[static_cast<size_t>(k - lead)] = a[k] / scale_param;
  return ScaledForm<T>{lead, scale_param, TruncatedSeries<T>(std::move(tail))};
}

}  // namespace askey

#endif  // ASKEY_SERIES_HPP
