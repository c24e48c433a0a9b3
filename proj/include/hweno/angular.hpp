#pragma once

#include <stdexcept>
#include <vector>

#include "hweno/precision.hpp"

namespace hweno {

inline WorkReal factorial_w(int n) {
  WorkReal f(1);
  for (int i = 2; i <= n; ++i) f = f * WorkReal(i);
  return f;
}

inline WorkReal binomial_w(int n, int k) {
  if (k < 0 || k > n) return WorkReal(0);
  WorkReal b(1);
  for (int i = 0; i < k; ++i)
    b = b * WorkReal(n - i) / WorkReal(i + 1);
  return b;
}

// Spin-weighted spherical harmonic at m-mode mm, azimuth factored out:
// sYlm(theta, phi) = ylm0(...) * e^{i m phi} with the sum over one index
//   (-1)^m sqrt[(2l+1)/4pi (l+m)!(l-m)!/((l+s)!(l-s)!)] sin^{2l}(th/2)
//   * sum_r C(l-s,r) C(l+s, r+s-m) (-1)^{l-r-s} cot^{2r+s-m}(th/2).
// Real for any (l, m, s); theta strictly inside (0, pi).
inline WorkReal spin_ylm_theta(int s, int l, int mm, const WorkReal& theta) {
  if (l < std::abs(s) || l < std::abs(mm))
    throw std::invalid_argument("spin_ylm_theta: need l >= max(|s|, |m|)");
  WorkReal sh, ch;
  sin_cos(theta / WorkReal(2), sh, ch);
  WorkReal cot = ch / sh;
  WorkReal pref = (WorkReal(2 * l + 1) / (WorkReal(4) * dd_pi)) *
                  factorial_w(l + mm) * factorial_w(l - mm) /
                  (factorial_w(l + s) * factorial_w(l - s));
  pref = sqrt(pref);
  if (mm % 2 != 0) pref = -pref;
  WorkReal s2l(1);
  for (int i = 0; i < 2 * l; ++i) s2l = s2l * sh;
  WorkReal sum(0);
  for (int r = 0; r <= l - s; ++r) {
    int cp = 2 * r + s - mm;
    if (cp < 0) continue;
    WorkReal term = binomial_w(l - s, r) * binomial_w(l + s, r + s - mm);
    if (term.hi == 0.0) continue;
    WorkReal cpow(1);
    for (int i = 0; i < cp; ++i) cpow = cpow * cot;
    if ((l - r - s) % 2 != 0) term = -term;
    sum = sum + term * cpow;
  }
  return pref * s2l * sum;
}

// Gauss-Legendre nodes/weights on [-1, 1] in work precision: double-seeded
// Newton iterations on P_n, weights 2/((1-x^2) P_n'^2).
struct GaussLegendre {
  std::vector<WorkReal> x, w;
};

inline GaussLegendre gauss_legendre(int n) {
  GaussLegendre gl;
  gl.x.resize(n);
  gl.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double seed = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    WorkReal x(seed);
    WorkReal dp(0);
    for (int it = 0; it < 6; ++it) {
      WorkReal p0(1), p1 = x;
      for (int k = 2; k <= n; ++k) {
        WorkReal p2 = (WorkReal(2 * k - 1) * x * p1 - WorkReal(k - 1) * p0) /
                      WorkReal(k);
        p0 = p1;
        p1 = p2;
      }
      dp = WorkReal(n) * (x * p1 - p0) / (x * x - WorkReal(1));
      x = x - p1 / dp;
    }
    gl.x[n - 1 - i] = x;
    gl.w[n - 1 - i] = WorkReal(2) / ((WorkReal(1) - x * x) * dp * dp);
  }
  return gl;
}

}  // namespace hweno
