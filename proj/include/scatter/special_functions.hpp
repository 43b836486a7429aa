#pragma once

// Cylindrical Bessel/Hankel functions of integer order and the 2D free-space
// Green's functions built on them.
//
// Orders 0 and 1 are evaluated together: for z < 25 by Miller's backward
// recurrence normalised with J0 + 2*sum J_2k = 1, with Y0/Y1 obtained from
// the Neumann series over the same recurrence values; for z >= 25 by the
// Hankel asymptotic expansion truncated at its smallest term. Both branches
// stay well below 1e-12 absolute error for double.

#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Core>

#include "scatter/error.hpp"

namespace scatter::special {

template <std::floating_point T>
struct BesselPair {
  T j0, j1, y0, y1;
};

namespace detail {

template <std::floating_point T>
constexpr T kAsymptoticThreshold = T(25);

template <std::floating_point T>
int miller_start_order(T z, int min_order) {
  const int m = static_cast<int>(z + T(14) * std::cbrt(z) + T(20));
  const int start = std::max(m, min_order + 20);
  return start + (start % 2);  // even, so the normalisation sum closes on J_0
}

// Hankel's expansion: returns (P, Q) such that
//   J_nu = sqrt(2/(pi z)) (P cos chi - Q sin chi)
//   Y_nu = sqrt(2/(pi z)) (P sin chi + Q cos chi),  chi = z - (nu/2 + 1/4) pi.
template <std::floating_point T>
std::pair<T, T> hankel_pq(int nu, T z) {
  const T mu = T(4) * T(nu) * T(nu);
  T p = T(1), q = T(0);
  T term = T(1);
  T prev_abs = std::numeric_limits<T>::infinity();
  for (int k = 1; k < 200; ++k) {
    const T odd = T(2 * k - 1);
    term *= (mu - odd * odd) / (T(k) * T(8) * z);
    const T mag = std::abs(term);
    if (mag >= prev_abs) break;  // asymptotic series: stop at smallest term
    prev_abs = mag;
    // a_k enters P with sign (-1)^(k/2) for even k, Q with (-1)^((k-1)/2).
    switch (k % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
    }
    if (mag < std::numeric_limits<T>::epsilon() * T(1e-3)) break;
  }
  return {p, q};
}

template <std::floating_point T>
BesselPair<T> asymptotic01(T z) {
  const T pi = std::numbers::pi_v<T>;
  const T amp = std::sqrt(T(2) / (pi * z));
  const auto [p0, q0] = hankel_pq<T>(0, z);
  const auto [p1, q1] = hankel_pq<T>(1, z);
  const T chi0 = z - pi / T(4);
  const T chi1 = z - T(3) * pi / T(4);
  const T c0 = std::cos(chi0), s0 = std::sin(chi0);
  const T c1 = std::cos(chi1), s1 = std::sin(chi1);
  return {amp * (p0 * c0 - q0 * s0), amp * (p1 * c1 - q1 * s1),
          amp * (p0 * s0 + q0 * c0), amp * (p1 * s1 + q1 * c1)};
}

template <std::floating_point T>
BesselPair<T> miller01(T z) {
  const T pi = std::numbers::pi_v<T>;
  const T big = T(1e200);
  const int m_start = miller_start_order(z, 1);

  // f_m ~ J_m up to a common factor. Walk down from m_start.
  T f_next = T(0);       // f_{m+1}
  T f = T(1e-30);        // f_m
  T norm = T(0);         // f_0 + 2 sum f_2k
  T neumann0 = T(0);     // sum_{k>=1} (-1)^k f_2k / k
  T neumann1 = T(0);     // sum_{k>=1} (-1)^k (f_{2k-1} - f_{2k+1}) / k
  T f_odd_above = T(0);  // f_{2k+1} for the current even m = 2k

  for (int m = m_start; m >= 1; --m) {
    const T f_prev = (T(2 * m) / z) * f - f_next;  // f_{m-1}
    if (m % 2 == 0) {
      const int k = m / 2;
      const T sign = (k % 2 == 0) ? T(1) : T(-1);
      norm += T(2) * f;
      neumann0 += sign * f / T(k);
      // f_prev is f_{2k-1}; f_odd_above is f_{2k+1}.
      neumann1 += sign * (f_prev - f_odd_above) / T(k);
    } else {
      f_odd_above = f;
    }
    f_next = f;
    f = f_prev;
    if (std::abs(f) > big) {
      const T s = T(1) / big;
      f *= s; f_next *= s; norm *= s; neumann0 *= s; neumann1 *= s;
      f_odd_above *= s;
    }
  }
  // f holds f_0, f_next holds f_1.
  norm += f;
  const T j0 = f / norm;
  const T j1 = f_next / norm;
  const T log_term = std::log(z / T(2)) + std::numbers::egamma_v<T>;
  const T y0 = (T(2) / pi) * log_term * j0 - (T(4) / pi) * neumann0 / norm;
  const T y1 = -(T(2) / pi) * j0 / z + (T(2) / pi) * log_term * j1 +
               (T(2) / pi) * neumann1 / norm;
  return {j0, j1, y0, y1};
}

// J_n(z) for n >= 2 by normalised backward recurrence.
template <std::floating_point T>
T miller_jn(int n, T z) {
  const T big = T(1e200);
  const int m_start = miller_start_order(z, n);
  T f_next = T(0), f = T(1e-30), norm = T(0), fn = T(0);
  for (int m = m_start; m >= 1; --m) {
    const T f_prev = (T(2 * m) / z) * f - f_next;
    if (m % 2 == 0) norm += T(2) * f;
    if (m == n) fn = f;
    f_next = f;
    f = f_prev;
    if (std::abs(f) > big) {
      const T s = T(1) / big;
      f *= s; f_next *= s; norm *= s; fn *= s;
    }
  }
  norm += f;
  return fn / norm;
}

inline std::string arg_string(double z) { return std::to_string(z); }

}  // namespace detail

// J0, J1, Y0, Y1 at a single positive argument.
template <std::floating_point T>
BesselPair<T> bessel01(T z) {
  if (!(z > T(0))) {
    throw DomainError("bessel01: argument must be positive, got " +
                      detail::arg_string(static_cast<double>(z)));
  }
  return z < detail::kAsymptoticThreshold<T> ? detail::miller01(z)
                                              : detail::asymptotic01(z);
}

template <std::floating_point T>
T bessel_j0(T z) {
  if (!(z >= T(0))) {
    throw DomainError("bessel_j0: negative argument " +
                      detail::arg_string(static_cast<double>(z)));
  }
  if (z == T(0)) return T(1);
  return bessel01(z).j0;
}

template <std::floating_point T>
T bessel_j1(T z) {
  if (!(z >= T(0))) {
    throw DomainError("bessel_j1: negative argument " +
                      detail::arg_string(static_cast<double>(z)));
  }
  if (z == T(0)) return T(0);
  return bessel01(z).j1;
}

template <std::floating_point T>
T bessel_y0(T z) {
  if (!(z > T(0))) {
    throw DomainError("bessel_y0: argument must be positive (log singularity at 0), got " +
                      detail::arg_string(static_cast<double>(z)));
  }
  return bessel01(z).y0;
}

template <std::floating_point T>
T bessel_y1(T z) {
  if (!(z > T(0))) {
    throw DomainError("bessel_y1: argument must be positive, got " +
                      detail::arg_string(static_cast<double>(z)));
  }
  return bessel01(z).y1;
}

// Integer-order J_n, any sign of n, z >= 0.
template <std::floating_point T>
T bessel_jn(int n, T z) {
  if (!(z >= T(0))) {
    throw DomainError("bessel_jn: negative argument " +
                      detail::arg_string(static_cast<double>(z)));
  }
  if (n < 0) return (n % 2 == 0 ? T(1) : T(-1)) * bessel_jn(-n, z);
  if (z == T(0)) return n == 0 ? T(1) : T(0);
  if (n == 0) return bessel01(z).j0;
  if (n == 1) return bessel01(z).j1;
  if (z >= detail::kAsymptoticThreshold<T> && T(n) < z / T(4)) {
    // Forward recurrence is stable while n < z.
    const auto b = bessel01(z);
    T jm1 = b.j0, jm = b.j1;
    for (int m = 1; m < n; ++m) {
      const T jp = (T(2 * m) / z) * jm - jm1;
      jm1 = jm;
      jm = jp;
    }
    return jm;
  }
  return detail::miller_jn(n, z);
}

// Integer-order Y_n by forward recurrence from Y0, Y1.
template <std::floating_point T>
T bessel_yn(int n, T z) {
  if (!(z > T(0))) {
    throw DomainError("bessel_yn: argument must be positive, got " +
                      detail::arg_string(static_cast<double>(z)));
  }
  if (n < 0) return (n % 2 == 0 ? T(1) : T(-1)) * bessel_yn(-n, z);
  const auto b = bessel01(z);
  if (n == 0) return b.y0;
  T ym1 = b.y0, ym = b.y1;
  for (int m = 1; m < n; ++m) {
    const T yp = (T(2 * m) / z) * ym - ym1;
    ym1 = ym;
    ym = yp;
  }
  return ym;
}

template <std::floating_point T>
std::complex<T> hankel1_0(T z) {
  if (!(z > T(0))) {
    throw DomainError("hankel1_0: argument must be positive, got " +
                      detail::arg_string(static_cast<double>(z)));
  }
  const auto b = bessel01(z);
  return {b.j0, b.y0};
}

template <std::floating_point T>
std::complex<T> hankel1_1(T z) {
  if (!(z > T(0))) {
    throw DomainError("hankel1_1: argument must be positive, got " +
                      detail::arg_string(static_cast<double>(z)));
  }
  const auto b = bessel01(z);
  return {b.j1, b.y1};
}

template <std::floating_point T>
std::complex<T> hankel1_n(int n, T z) {
  return {bessel_jn(n, z), bessel_yn(n, z)};
}

template <std::floating_point T>
using Point2 = Eigen::Matrix<T, 2, 1>;

// Outgoing free-space Green's function of the 2D Helmholtz operator,
// (i/4) H0^(1)(k|x - y|).
template <std::floating_point T>
std::complex<T> green_2d(const Point2<T>& x, const Point2<T>& y, T k) {
  if (!(k > T(0))) throw DomainError("green_2d: wavenumber must be positive");
  const T r = (x - y).norm();
  if (r == T(0)) {
    throw DomainError("green_2d: singular at x == y; use the self-cell integral");
  }
  return std::complex<T>(T(0), T(0.25)) * hankel1_0(k * r);
}

// Far-field kernel: G(x, R yhat) ~ e^{ikR}/sqrt(R) * green_far_2d(x, yhat, k).
template <std::floating_point T>
std::complex<T> green_far_2d(const Point2<T>& x, const Point2<T>& yhat, T k) {
  if (!(k > T(0))) throw DomainError("green_far_2d: wavenumber must be positive");
  if (std::abs(yhat.norm() - T(1)) > T(1e-12)) {
    throw DomainError("green_far_2d: direction is not a unit vector");
  }
  const T pi = std::numbers::pi_v<T>;
  const T prefactor = T(1) / std::sqrt(T(8) * k * pi);
  const T phase = pi / T(4) - k * x.dot(yhat);
  return std::polar(prefactor, phase);
}

}  // namespace scatter::special
