#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hweno/angular.hpp"
#include "hweno/evolve.hpp"
#include "hweno/geometry.hpp"

namespace hweno {

// Complex sample in work precision.
struct CxW {
  WorkReal re{0.0}, im{0.0};
};

inline CxW operator+(const CxW& a, const CxW& b) {
  return {a.re + b.re, a.im + b.im};
}
inline CxW operator-(const CxW& a, const CxW& b) {
  return {a.re - b.re, a.im - b.im};
}
inline CxW operator*(const CxW& a, const CxW& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CxW operator/(const CxW& a, const CxW& b) {
  WorkReal n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline WorkReal cx_abs(const CxW& a) {
  return sqrt(a.re * a.re + a.im * a.im);
}

// Delta = r^2 - 2 M r + a^2, zero at the horizon radius.
inline WorkReal kerr_delta(const WorkReal& r, const PhysicalParams& p) {
  return r * r - WorkReal(2) * p.M * r + p.a * p.a;
}

// The state stores the horizon-regular field Phi itself; state_sample is the
// identity-mode read.  The conversions relate Phi to the singular variable
// (r/Delta^2 scaling) and to the two curvature-scalar conventions
//   psi4_hh = Phi * 4 (r^2+a^2)^2 / (r (r - i a cos th)^4)
//   psi4_k  = Phi * Delta^2 / (r (r - i a cos th)^4)
// each an exact inverse pair with its phi_from_* partner where defined.
inline CxW state_sample(const StateVec& u, const FieldLayout& lay, int j,
                        int k) {
  return {u[lay.at(0, j, k)], u[lay.at(1, j, k)]};
}

CxW psi_to_phi(const CxW& psi, const WorkReal& r, const PhysicalParams& p);
CxW psi4hh_from_phi(const CxW& phi, const WorkReal& r, const WorkReal& costh,
                    const PhysicalParams& p);
CxW phi_from_psi4hh(const CxW& psi4, const WorkReal& r, const WorkReal& costh,
                    const PhysicalParams& p);
CxW psi4k_from_phi(const CxW& phi, const WorkReal& r, const WorkReal& costh,
                   const PhysicalParams& p);

// Finite-difference weights on the unit-spaced nodes 0, 1, ..., npts-1 for
// the deriv-th derivative evaluated at x0 (same units; any real offset).
// Solved from the Taylor system by elimination in work precision; formal
// order npts - deriv.  The caller divides by h^deriv.
std::vector<WorkReal> one_sided_coeffs(int npts, int deriv,
                                       const WorkReal& x0);

// Phi and its first three radial derivatives evaluated exactly at rho_+,
// which sits between gridpoints: stencils of widths 5/6/7/8 anchored at the
// last gridpoint before the horizon carry the fractional offset, so a field
// linear in (rho - rho_+) gives dphi[0] = 1 and (rho - rho_+)^2 gives 0.
struct HorizonObservables {
  CxW phi;
  CxW dphi[3];  // dphi[d-1] holds the d-th radial derivative
};

class HorizonSampler {
 public:
  HorizonSampler(const Grid& g, const PhysicalParams& p,
                 const FieldLayout& lay, int ktheta);

  HorizonObservables sample(const StateVec& u) const;
  int base_index() const { return j0_; }

 private:
  FieldLayout lay_;
  int k_ = 0, j0_ = 0;
  std::vector<WorkReal> co_[4];  // width 5+d weights, pre-divided by h^d
};

// First radial derivative of Phi at rho_+ (the horizon-hair observable).
CxW aretakis_charge(const StateVec& u, const FieldLayout& lay, const Grid& g,
                    const PhysicalParams& p, int ktheta);

// Uniformly sampled complex series; im stays zero for real-valued series.
struct TimeSeries {
  std::string label;
  std::vector<WorkReal> tau, re, im;

  size_t size() const { return tau.size(); }
  void push(const WorkReal& t, const WorkReal& r, const WorkReal& i) {
    tau.push_back(t);
    re.push_back(r);
    im.push_back(i);
  }
};

// Local power-law index p = tau * d|f|/dtau / |f| by 4th-order centered
// differencing of the modulus.  Entries whose five-point window dips below
// 1e-25 of the peak modulus are omitted (gaps, never NaN).
TimeSeries local_power_index(const TimeSeries& s);

// Windowed statistics over tau in [t0, t1]: mean/min/max of the modulus
// (count = entries seen).  rel drift = (max - min) / |mean|.
struct WindowStats {
  WorkReal mean{0.0}, min{0.0}, max{0.0};
  long count = 0;
};
WindowStats window_stats(const TimeSeries& s, double t0, double t1);
WorkReal window_mean_re(const TimeSeries& s, double t0, double t1);
inline WorkReal window_rel_drift(const TimeSeries& s, double t0, double t1) {
  WindowStats w = window_stats(s, t0, t1);
  return (w.max - w.min) / fabs(w.mean);
}

// Interior theta row of one component at radial index j.
std::vector<WorkReal> theta_slice(const StateVec& u, const FieldLayout& lay,
                                  int comp, int j);

// Coefficient of the (s, m=0) angular basis function ell in a staggered
// theta slice: Gauss-Legendre quadrature in cos(theta) with
// max(Ntheta, 2 ell + 8) nodes, slice values interpolated by 4-point
// Lagrange across the parity extension.  The _fn variant integrates exact
// function evaluations instead (no interpolation error).
WorkReal multipole_project(const std::vector<WorkReal>& slice, int s, int mm,
                           int ell);
WorkReal multipole_project_fn(const std::function<WorkReal(const WorkReal&)>& f,
                              int s, int mm, int ell, int nodes);

}  // namespace hweno
