#pragma once

#include <type_traits>

#include "hweno/precision.hpp"

namespace hweno {

enum class PrecisionMode { full, mixed };
enum class Scheme { weno5, weno3, fd6ko };

inline WorkReal promote_weight(const WorkReal& w) { return w; }
inline WorkReal promote_weight(WeightReal w) { return WorkReal(w); }

// eps = infinity freezes the nonlinear weights at their linear-scheme values,
// making the reconstruction an exactly linear operator (linearity harness).
inline bool weight_is_inf(const WorkReal& e) { return std::isinf(e.hi); }
inline bool weight_is_inf(WeightReal e) { return std::isinf(e); }

// ---------------------------------------------------------------------------
// WENO interface reconstructions (Jiang-Shu).  The "plus" orientation takes
// the window (u_{j-2} .. u_{j+2}) and returns the left-biased interface value
// at j+1/2; the "minus" orientation is its mirror image, obtained by calling
// the same formulas on the reversed window (u_{j+3} .. u_{j-1}).  Weights are
// computed in the scalar TW (WorkReal in full mode, WeightReal in mixed mode)
// and always renormalized so they sum to 1 in work precision.
// ---------------------------------------------------------------------------

template <class TW>
inline void weno5_weights_t(const WorkReal& a0, const WorkReal& a1,
                            const WorkReal& a2, const WorkReal& a3,
                            const WorkReal& a4, TW eps, TW w[3]) {
  if (weight_is_inf(eps)) {
    w[0] = TW(1) / TW(10);
    w[1] = TW(6) / TW(10);
    w[2] = TW(3) / TW(10);
    return;
  }
  TW f0, f1, f2, f3, f4;
  if constexpr (std::is_same_v<TW, WeightReal>) {
    f0 = demote(a0); f1 = demote(a1); f2 = demote(a2);
    f3 = demote(a3); f4 = demote(a4);
  } else {
    f0 = a0; f1 = a1; f2 = a2; f3 = a3; f4 = a4;
  }
  const TW c1312 = TW(13) / TW(12);
  const TW quarter = TW(1) / TW(4);
  TW t = f0 - TW(2) * f1 + f2;
  TW s = f0 - TW(4) * f1 + TW(3) * f2;
  TW is0 = c1312 * t * t + quarter * s * s;
  t = f1 - TW(2) * f2 + f3;
  s = f1 - f3;
  TW is1 = c1312 * t * t + quarter * s * s;
  t = f2 - TW(2) * f3 + f4;
  s = TW(3) * f2 - TW(4) * f3 + f4;
  TW is2 = c1312 * t * t + quarter * s * s;
  TW e0 = eps + is0, e1 = eps + is1, e2 = eps + is2;
  TW a_0 = (TW(1) / TW(10)) / (e0 * e0);
  TW a_1 = (TW(6) / TW(10)) / (e1 * e1);
  TW a_2 = (TW(3) / TW(10)) / (e2 * e2);
  TW inv = TW(1) / (a_0 + a_1 + a_2);
  w[0] = a_0 * inv;
  w[1] = a_1 * inv;
  w[2] = a_2 * inv;
}

// plus-orientation interface value from weights already in work precision
inline WorkReal weno5_combine(const WorkReal& a0, const WorkReal& a1,
                              const WorkReal& a2, const WorkReal& a3,
                              const WorkReal& a4, const WorkReal w[3]) {
  const WorkReal sixth = WorkReal(1) / WorkReal(6);
  WorkReal q0 = (WorkReal(2) * a0 - WorkReal(7) * a1 + WorkReal(11) * a2);
  WorkReal q1 = (-a1 + WorkReal(5) * a2 + WorkReal(2) * a3);
  WorkReal q2 = (WorkReal(2) * a2 + WorkReal(5) * a3 - a4);
  return sixth * (w[0] * q0 + w[1] * q1 + w[2] * q2);
}

template <class TW>
inline WorkReal weno5_interface(const WorkReal& a0, const WorkReal& a1,
                                const WorkReal& a2, const WorkReal& a3,
                                const WorkReal& a4, TW eps) {
  TW wt[3];
  weno5_weights_t(a0, a1, a2, a3, a4, eps, wt);
  // renormalize in work precision so the three weights sum to 1 exactly
  WorkReal w[3] = {promote_weight(wt[0]), promote_weight(wt[1]),
                   promote_weight(wt[2])};
  WorkReal inv = WorkReal(1) / (w[0] + w[1] + w[2]);
  w[0] = w[0] * inv;
  w[1] = w[1] * inv;
  w[2] = w[2] * inv;
  return weno5_combine(a0, a1, a2, a3, a4, w);
}

template <class TW>
inline void weno3_weights_t(const WorkReal& a0, const WorkReal& a1,
                            const WorkReal& a2, TW eps, TW w[2]) {
  if (weight_is_inf(eps)) {
    w[0] = TW(1) / TW(3);
    w[1] = TW(2) / TW(3);
    return;
  }
  TW f0, f1, f2;
  if constexpr (std::is_same_v<TW, WeightReal>) {
    f0 = demote(a0); f1 = demote(a1); f2 = demote(a2);
  } else {
    f0 = a0; f1 = a1; f2 = a2;
  }
  TW d0 = f1 - f0, d1 = f2 - f1;
  TW e0 = eps + d0 * d0, e1 = eps + d1 * d1;
  TW a_0 = (TW(1) / TW(3)) / (e0 * e0);
  TW a_1 = (TW(2) / TW(3)) / (e1 * e1);
  TW inv = TW(1) / (a_0 + a_1);
  w[0] = a_0 * inv;
  w[1] = a_1 * inv;
}

template <class TW>
inline WorkReal weno3_interface(const WorkReal& a0, const WorkReal& a1,
                                const WorkReal& a2, TW eps) {
  TW wt[2];
  weno3_weights_t(a0, a1, a2, eps, wt);
  WorkReal w0 = promote_weight(wt[0]), w1 = promote_weight(wt[1]);
  WorkReal inv = WorkReal(1) / (w0 + w1);
  w0 = w0 * inv;
  w1 = w1 * inv;
  WorkReal half = WorkReal(1) / WorkReal(2);
  WorkReal q0 = half * (WorkReal(3) * a1 - a0);
  WorkReal q1 = half * (a1 + a2);
  return w0 * q0 + w1 * q1;
}

// ---------------------------------------------------------------------------
// Row-level biased derivative by flux differencing:
//   du_j = (fhat_{j+1/2} - fhat_{j-1/2}) / drho.
// u points at the first interior sample; u[-4 .. n+3] must be valid (ghosts).
// minus = true selects the right-biased (mirrored) reconstruction, used for
// fields whose wavespeed is negative.
// ---------------------------------------------------------------------------

template <class TW>
void weno5_row_derivative(const WorkReal* u, int n, const WorkReal& drho,
                          TW eps, bool minus, WorkReal* du) {
  WorkReal inv = WorkReal(1) / drho;
  WorkReal prev = minus ? weno5_interface(u[2], u[1], u[0], u[-1], u[-2], eps)
                        : weno5_interface(u[-3], u[-2], u[-1], u[0], u[1], eps);
  for (int j = 0; j < n; ++j) {
    WorkReal cur =
        minus ? weno5_interface(u[j + 3], u[j + 2], u[j + 1], u[j], u[j - 1],
                                eps)
              : weno5_interface(u[j - 2], u[j - 1], u[j], u[j + 1], u[j + 2],
                                eps);
    du[j] = (cur - prev) * inv;
    prev = cur;
  }
}

template <class TW>
void weno3_row_derivative(const WorkReal* u, int n, const WorkReal& drho,
                          TW eps, bool minus, WorkReal* du) {
  WorkReal inv = WorkReal(1) / drho;
  WorkReal prev = minus ? weno3_interface(u[1], u[0], u[-1], eps)
                        : weno3_interface(u[-2], u[-1], u[0], eps);
  for (int j = 0; j < n; ++j) {
    WorkReal cur = minus ? weno3_interface(u[j + 2], u[j + 1], u[j], eps)
                         : weno3_interface(u[j - 1], u[j], u[j + 1], eps);
    du[j] = (cur - prev) * inv;
    prev = cur;
  }
}

// ---------------------------------------------------------------------------
// Centered sixth-order derivative and Kreiss-Oliger style 8th-difference
// dissipation.  ko8 returns sigma/(256 h) times the undivided 8th central
// difference; the right-hand side subtracts it, damping the highest
// frequencies (the symbol sigma sin^8(kh/2)/h is non-negative).
// ---------------------------------------------------------------------------

inline WorkReal fd6_derivative(const WorkReal* u, const WorkReal& drho) {
  // window u[-3..3]
  return (u[3] - u[-3] - WorkReal(9) * (u[2] - u[-2]) +
          WorkReal(45) * (u[1] - u[-1])) / (WorkReal(60) * drho);
}

inline WorkReal ko8_dissipation(const WorkReal* u, const WorkReal& sigma,
                                const WorkReal& h) {
  // window u[-4..4]; undivided 8th central difference
  WorkReal d8 = u[-4] + u[4] - WorkReal(8) * (u[-3] + u[3]) +
                WorkReal(28) * (u[-2] + u[2]) - WorkReal(56) * (u[-1] + u[1]) +
                WorkReal(70) * u[0];
  return sigma * d8 / (WorkReal(256) * h);
}

inline void fd6_row_derivative(const WorkReal* u, int n, const WorkReal& drho,
                               WorkReal* du) {
  for (int j = 0; j < n; ++j) du[j] = fd6_derivative(u + j, drho);
}

inline void ko8_row(const WorkReal* u, int n, const WorkReal& sigma,
                    const WorkReal& h, WorkReal* q) {
  for (int j = 0; j < n; ++j) q[j] = ko8_dissipation(u + j, sigma, h);
}

// ---------------------------------------------------------------------------
// Fourth-order centered theta derivatives on a strided column.  col points at
// the first interior sample; col[-2*stride .. (n+1)*stride] must be valid.
// ---------------------------------------------------------------------------

inline void theta_derivatives_column(const WorkReal* col, int n,
                                     long long stride, const WorkReal& dtheta,
                                     WorkReal* d1, WorkReal* d2) {
  WorkReal inv1 = WorkReal(1) / (WorkReal(12) * dtheta);
  WorkReal inv2 = WorkReal(1) / (WorkReal(12) * dtheta * dtheta);
  for (int k = 0; k < n; ++k) {
    const WorkReal* c = col + k * stride;
    WorkReal m2 = c[-2 * stride], m1 = c[-stride], p1 = c[stride],
             p2 = c[2 * stride];
    if (d1) d1[k] = (m2 - WorkReal(8) * m1 + WorkReal(8) * p1 - p2) * inv1;
    if (d2)
      d2[k] = (-m2 + WorkReal(16) * m1 - WorkReal(30) * c[0] +
               WorkReal(16) * p1 - p2) * inv2;
  }
}

}  // namespace hweno
