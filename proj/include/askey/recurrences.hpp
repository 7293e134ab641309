#ifndef ASKEY_RECURRENCES_HPP
#define ASKEY_RECURRENCES_HPP

// Classical three-term recurrences, pinned in one place as external data.
// Each evaluator carries its source so a wrong constant is a one-place fix.
// These are the independent oracle route against the generating-function
// coefficient extraction in families.hpp.

#include "askey/precision.hpp"

namespace askey::recurrence {

/// Hermite H_n. DLMF 18.9.25: H_{n+1} = 2x H_n - 2n H_{n-1}, H_0 = 1, H_1 = 2x.
template <class T>
T hermite(int n, const T& x) {
  if (n == 0) return T(1);
  T prev = T(1), cur = real_of<T>(2) * x;
  for (int m = 1; m < n; ++m) {
    T next = real_of<T>(2) * x * cur - real_of<T>(2 * m) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Generalized Laguerre L_n^(a). DLMF 18.9.13:
/// (n+1) L_{n+1} = (2n+a+1-x) L_n - (n+a) L_{n-1}, L_0 = 1, L_1 = 1+a-x.
/// Valid for arbitrary (also complex) order a.
template <class T>
T laguerre(int n, const T& a, const T& x) {
  if (n == 0) return T(1);
  T prev = T(1), cur = T(1) + a - x;
  for (int m = 1; m < n; ++m) {
    T next = ((real_of<T>(2 * m + 1) + a - x) * cur - (real_of<T>(m) + a) * prev) / real_of<T>(m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Ultraspherical (Gegenbauer) C_n^(g). DLMF 18.9.7/8 with lambda = g:
/// (n+1) C_{n+1} = 2(n+g) x C_n - (n+2g-1) C_{n-1}, C_0 = 1, C_1 = 2gx.
template <class T>
T ultraspherical(int n, const real_of<T>& g, const T& x) {
  if (n == 0) return T(1);
  T prev = T(1), cur = real_of<T>(2) * g * x;
  for (int m = 1; m < n; ++m) {
    T next = (real_of<T>(2) * (real_of<T>(m) + g) * x * cur - (real_of<T>(m) + real_of<T>(2) * g - real_of<T>(1)) * prev) /
             real_of<T>(m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Jacobi P_n^(a,b). DLMF 18.9.2:
/// 2n(n+a+b)(2n+a+b-2) P_n = (2n+a+b-1)[(2n+a+b)(2n+a+b-2)x + a^2-b^2] P_{n-1}
///                           - 2(n+a-1)(n+b-1)(2n+a+b) P_{n-2},
/// P_0 = 1, P_1 = (a+1) + (a+b+2)(x-1)/2.
template <class T>
T jacobi(int n, const real_of<T>& a, const real_of<T>& b, const T& x) {
  using R = real_of<T>;
  if (n == 0) return T(1);
  T prev = T(1);
  T cur = T(a + R(1)) + (a + b + R(2)) * (x - T(1)) / R(2);
  for (int m = 2; m <= n; ++m) {
    R rm(m);
    R s = R(2) * rm + a + b;
    T num = (s - R(1)) * ((s * (s - R(2))) * x + T(a * a - b * b)) * cur -
            R(2) * (rm + a - R(1)) * (rm + b - R(1)) * s * prev;
    T next = num / (R(2) * rm * (rm + a + b) * (s - R(2)));
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Meixner-Pollaczek P_n^(l)(x; phi). Koekoek-Swarttouw report 98-17, (1.7.3):
/// (n+1) P_{n+1} = 2[x sin(phi) + (n+l) cos(phi)] P_n - (n+2l-1) P_{n-1},
/// P_0 = 1, P_1 = 2[l cos(phi) + x sin(phi)].
template <class T>
T meixner_pollaczek(int n, const real_of<T>& l, const real_of<T>& phi, const T& x) {
  using R = real_of<T>;
  using std::cos, std::sin;
  const R c = cos(phi), s = sin(phi);
  if (n == 0) return T(1);
  T prev = T(1), cur = R(2) * (T(l * c) + x * s);
  for (int m = 1; m < n; ++m) {
    T next = (R(2) * (x * s + T((R(m) + l) * c)) * cur - (R(m) + R(2) * l - R(1)) * prev) / R(m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Meixner M_n(x; b, c). Koekoek-Swarttouw (1.9.3), solved for M_{n+1}:
/// c(n+b) M_{n+1} = [(c-1)x + n + (n+b)c] M_n - n M_{n-1}, M_0 = 1.
/// (c-1)x is kept as one product: near c -> 1 with x ~ 1/(1-c) both factors
/// are extreme but the product stays O(1).
template <class T>
T meixner(int n, const real_of<T>& b, const real_of<T>& c, const T& x) {
  using R = real_of<T>;
  if (n == 0) return T(1);
  T prev = T(1), cur = T(1) + (c - R(1)) * x / (b * c);
  for (int m = 1; m < n; ++m) {
    T next = (((c - R(1)) * x + T(R(m) + (R(m) + b) * c)) * cur - R(m) * prev) / (c * (R(m) + b));
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Krawtchouk K_n(x; p, N), 0 <= n <= N. Koekoek-Swarttouw (1.10.3):
/// p(N-n) K_{n+1} = [p(N-n) + n(1-p) - x] K_n - n(1-p) K_{n-1}, K_0 = 1.
template <class T>
T krawtchouk(int n, const real_of<T>& p, int N, const T& x) {
  using R = real_of<T>;
  if (n == 0) return T(1);
  T prev = T(1), cur = T(1) - x / (p * R(N));
  for (int m = 1; m < n; ++m) {
    R pn = p * R(N - m);
    T next = ((T(pn + R(m) * (R(1) - p)) - x) * cur - R(m) * (R(1) - p) * prev) / pn;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace askey::recurrence

#endif  // ASKEY_RECURRENCES_HPP
