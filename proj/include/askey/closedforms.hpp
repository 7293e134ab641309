#ifndef ASKEY_CLOSEDFORMS_HPP
#define ASKEY_CLOSEDFORMS_HPP

// Tabulated closed forms for expansion parameters and low-order expansion
// coefficients, transcribed verbatim from their source tables. They exist
// to be checked against the series engine (selftest and the acceptance
// suite), not to drive any computation. Three of them are known to carry
// misprints; the cross-checks report those instead of patching them here:
//   - mp_onefree_c2: short by the constant 1/2 (the engine value equals
//     this plus 1/2; the same source's own recursion at k = 1 agrees with
//     the engine).
//   - mp_f8_c3: overall sign flipped (engine: (2/3)(2 xi - alpha - 1)(1 - cos phi)).
//   - mp_threefree_c4: "sin phi" inside the bracket should be "2 sin phi".

#include "askey/precision.hpp"

namespace askey::closed {

// Hermite-type specializations

template <class R>
R ultraspherical_A(const R& g, const R& x) { return R(2) * x * g; }

template <class R>
R ultraspherical_B(const R& g, const R& x) { return g * (R(1) - R(2) * x * x); }

template <class R>
R ultraspherical_c3(const R& g, const R& x) {
  return R(2) / R(3) * g * x * (R(4) * x * x - R(3));
}

template <class R>
R laguerre_alt_A(const R& a, const R& x) { return x - a - R(1); }

template <class R>
R laguerre_alt_B(const R& a, const R& x) { return x - (a + R(1)) / R(2); }

template <class R>
R laguerre_alt_c3(const R& a, const R& x) { return (R(3) * x - a - R(1)) / R(3); }

// One-free-parameter solves (B = 1, C = alpha), per family

template <class R>
R mp_onefree_A(const R& a, const R& l, const R& phi, const R& x) {
  using std::sin, std::cos;
  return a + R(1) - R(2) * l * cos(phi) - R(2) * x * sin(phi);
}

/// As tabulated; differs from the series engine by the constant +1/2.
template <class R>
R mp_onefree_c2(const R& a, const R& l, const R& phi, const R& x) {
  using std::sin, std::cos;
  return x * sin(R(2) * phi) + l * cos(R(2) * phi) - R(2) * (x * sin(phi) + l * cos(phi)) + a / R(2);
}

template <class R>
R jacobi_onefree_A(const R& a, const R& b, const R& x) {
  return (a + b + R(2)) * (R(1) - x) / R(2);
}

template <class R>
R jacobi_onefree_c2(const R& a, const R& b, const R& x) {
  return (-a + R(3) * b - R(2) * (a + R(3) * b + R(4)) * x + (R(3) * a + R(3) * b + R(8)) * x * x) / R(8);
}

template <class R>
R meixner_onefree_A(const R& a, const R& b, const R& c, const R& x) {
  return ((a - b + R(1)) * c + (R(1) - c) * x) / c;
}

template <class R>
R meixner_onefree_c2(const R& a, const R& b, const R& c, const R& x) {
  return ((R(1) + a - b) * c * c + (R(2) * c - c * c - R(1)) * x) / (R(2) * c * c);
}

template <class R>
R krawtchouk_onefree_A(const R& a, int N, const R& q, const R& x) {
  return a + R(1) - R(N) + (R(1) + q) * x;
}

template <class R>
R krawtchouk_onefree_c2(const R& a, int N, const R& q, const R& x) {
  return (R(1) + a - R(3) * R(N) + (R(3) + R(2) * q - q * q) * x) / R(2);
}

// Three-free-parameter Meixner-Pollaczek solve, polar form

template <class R>
R mp_threefree_B(const R& theta, const R& phi) {
  using std::sin;
  return sin((theta + R(3) * phi) / R(2)) / sin((theta + phi) / R(2));
}

template <class R>
R mp_threefree_A(const R& r, const R& theta, const R& phi) {
  using std::sin;
  return R(2) * r * sin(phi) * sin((theta + phi) / R(2)) / sin((theta + R(3) * phi) / R(2));
}

template <class R>
R mp_threefree_C_plus_1(const R& r, const R& theta, const R& phi) {
  using std::sin;
  const R B = mp_threefree_B(theta, phi);
  return R(2) * r * (sin(theta + R(2) * phi) + R(2) * sin(phi)) / (B * B);
}

/// As tabulated; the engine value replaces sin(phi) by 2 sin(phi).
template <class R>
R mp_threefree_c4(const R& r, const R& theta, const R& phi) {
  using std::sin;
  const R B = mp_threefree_B(theta, phi);
  return r / R(2) * (sin(theta + R(4) * phi) + (sin(phi) - sin(theta + R(2) * phi)) * B * B);
}

/// As tabulated; the engine value has the opposite sign.
template <class R>
R mp_f8_c3(const R& xi, const R& a, const R& phi) {
  using std::cos;
  return R(2) / R(3) * (a + R(1) - R(2) * xi) * (R(1) - cos(phi));
}

}  // namespace askey::closed

#endif  // ASKEY_CLOSEDFORMS_HPP
