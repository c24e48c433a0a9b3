#pragma once

#include <array>

#include "hweno/evolve.hpp"

// Manufactured smooth states for operator-residual studies: four independent
// Gaussian radial profiles (theta-independent, so the 4th-order theta stencil
// is exact) with tails far below work precision at both boundaries.  The
// analytic right-hand side uses the same per-point coefficient arrays as the
// discrete one, so their difference is pure radial truncation error.
namespace mms {

using hweno::CoefficientSet;
using hweno::FieldLayout;
using hweno::Grid;
using hweno::StateVec;
using hweno::WorkReal;

struct Bump {
  double c, w, amp;
  WorkReal value(const WorkReal& rho) const {
    WorkReal d = rho - WorkReal(c);
    WorkReal ww = WorkReal(w) * WorkReal(w);
    return WorkReal(amp) * exp(-(d * d) / (WorkReal(2) * ww));
  }
  WorkReal deriv(const WorkReal& rho) const {
    WorkReal d = rho - WorkReal(c);
    WorkReal ww = WorkReal(w) * WorkReal(w);
    return -(d / ww) * value(rho);
  }
};

inline std::array<Bump, 4> default_bumps() {
  return {Bump{8.5, 0.80, 1.00}, Bump{10.0, 0.90, 0.70},
          Bump{11.5, 0.85, -0.60}, Bump{9.2, 1.00, 0.45}};
}

inline StateVec build_state(const Grid& g, const FieldLayout& lay,
                            const std::array<Bump, 4>& b) {
  StateVec u(lay.size());
  for (int c = 0; c < 4; ++c)
    for (int j = 0; j < g.nrho; ++j) {
      WorkReal v = b[c].value(g.rho[j]);
      for (int k = 0; k < g.ntheta; ++k) u[lay.at(c, j, k)] = v;
    }
  return u;
}

inline StateVec analytic_rhs(const Grid& g, const CoefficientSet& cs,
                             const FieldLayout& lay,
                             const std::array<Bump, 4>& b) {
  StateVec du(lay.size());
  for (int j = 0; j < g.nrho; ++j) {
    const WorkReal& rho = g.rho[j];
    WorkReal psr = b[0].value(rho), psi = b[1].value(rho);
    WorkReal pir = b[2].value(rho), pii = b[3].value(rho);
    WorkReal dsr = b[0].deriv(rho), dsi = b[1].deriv(rho);
    WorkReal dpr = b[2].deriv(rho), dpi = b[3].deriv(rho);
    for (int k = 0; k < g.ntheta; ++k) {
      size_t i = size_t(cs.index(j, k));
      du[lay.at(0, j, k)] = pir - cs.b[i] * dsr;
      du[lay.at(1, j, k)] = pii - cs.b[i] * dsi;
      du[lay.at(2, j, k)] = -cs.lam[i] * dpr + cs.w_re[i] * dsr -
                            cs.w_im[i] * dsi + cs.bt_re[i] * pir -
                            cs.bt_im[i] * pii + cs.c_re[i] * psr -
                            cs.c_im[i] * psi;
      du[lay.at(3, j, k)] = -cs.lam[i] * dpi + cs.w_re[i] * dsi +
                            cs.w_im[i] * dsr + cs.bt_re[i] * pii +
                            cs.bt_im[i] * pir + cs.c_re[i] * psi +
                            cs.c_im[i] * psr;
    }
  }
  return du;
}

inline double residual_inf(const StateVec& dh, const StateVec& da,
                           const FieldLayout& lay) {
  double m = 0.0;
  for (int c = 0; c < 4; ++c)
    for (int j = 0; j < lay.nrho; ++j)
      for (int k = 0; k < lay.ntheta; ++k) {
        double d = std::fabs(hweno::to_double(dh[lay.at(c, j, k)] -
                                              da[lay.at(c, j, k)]));
        if (d > m) m = d;
      }
  return m;
}

}  // namespace mms
