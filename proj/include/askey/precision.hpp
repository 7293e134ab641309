#ifndef ASKEY_PRECISION_HPP
#define ASKEY_PRECISION_HPP

// Scalar layer. Every algorithm in this library is templated on the complex
// coefficient type T; the two instantiations used in practice are
//   - std::complex<double>   (hardware fast path)
//   - askey::Cplx            (MPFR-backed, runtime-selectable decimal digits)
// The working precision is a per-computation setting: call
// set_working_digits() once before building series on the Cplx path.

#include <complex>
#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>

#include "askey/errors.hpp"

namespace askey {

namespace mp = boost::multiprecision;

using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Cplx = mp::number<mp::complex_adaptor<mp::mpfr_float_backend<0>>, mp::et_off>;

inline void set_working_digits(int digits10) {
  if (digits10 < 6) throw InvalidParameter("working precision must be at least 6 digits");
  // the complex adaptor shares the scalar backend, so this covers Cplx too
  Real::default_precision(static_cast<unsigned>(digits10));
}

template <class T>
struct complex_traits;

template <>
struct complex_traits<std::complex<double>> {
  using real_type = double;
  static int digits10() { return 16; }
  static std::complex<double> make(double re, double im = 0.0) { return {re, im}; }
  static double real_from_string(const std::string& s) { return std::stod(s); }
};

template <>
struct complex_traits<Cplx> {
  using real_type = Real;
  static int digits10() { return static_cast<int>(Real::default_precision()); }
  static Cplx make(const Real& re, const Real& im = Real(0)) { return Cplx(re, im); }
  static Real real_from_string(const std::string& s) { return Real(s); }
};

template <class T>
using real_of = typename complex_traits<T>::real_type;

template <class T>
int working_digits() { return complex_traits<T>::digits10(); }

template <class T>
real_of<T> pi_value() {
  using std::acos;
  return acos(real_of<T>(-1));
}

/// 10^k at the working real type (k may be negative).
template <class R>
R pow10(int k) {
  using std::pow;
  return pow(R(10), k);
}

template <class T>
bool finite(const T& z) {
  using std::isfinite;
  return isfinite(real(z)) && isfinite(imag(z));
}

template <class T>
real_of<T> abs_value(const T& z) {
  using std::abs;
  return abs(z);
}

}  // namespace askey

#endif  // ASKEY_PRECISION_HPP
