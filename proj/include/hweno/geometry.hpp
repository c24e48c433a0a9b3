#pragma once

#include <stdexcept>
#include <vector>

#include "hweno/precision.hpp"

namespace hweno {

// Physical parameters of the wave operator: black-hole mass and spin, the
// field's spin weight s and azimuthal mode m, and the compactification scale S.
struct PhysicalParams {
  WorkReal M{1.0};
  WorkReal a{0.0};
  int spin = 0;
  int mmode = 0;
  WorkReal S{20.0};

  void validate() const;
};

WorkReal horizon_radius(const PhysicalParams& p);  // r+ = M + sqrt(M^2 - a^2)
WorkReal horizon_rho(const PhysicalParams& p);     // compactify(r+)

// rho = r/(1 + r/S) and its inverse r = rho/(1 - rho/S).
WorkReal compactify(const WorkReal& r, const WorkReal& S);
WorkReal decompactify(const WorkReal& rho, const WorkReal& S);

// Tortoise coordinate from the closed-form antiderivative of (r^2+a^2)/Delta,
// with zero integration constant in the form written in geometry.cpp.  The
// extremal case a = M uses its own closed form (double pole at r = M).
WorkReal tortoise(const WorkReal& r, const PhysicalParams& p);

// Height function h(r) = r^2/(r+S) - 4 ln[S/(r+S)] defining tau = t - r + r* - h
// (tuned to M = 1: the literal 4 is 4M), and its derivative.
WorkReal height(const WorkReal& r, const WorkReal& S);
WorkReal height_prime(const WorkReal& r, const WorkReal& S);

// Uniform (rho, theta) grid: rho in [rho_+ - 0.05, S] inclusive, theta
// staggered at (k + 1/2) * pi/Ntheta so the axis is never touched.  The last
// radial point is exactly S (scri), where r and rstar are +inf.
struct Grid {
  int nrho = 0;
  int ntheta = 0;
  WorkReal rho_min, drho, dtheta;
  std::vector<WorkReal> rho;     // size nrho
  std::vector<WorkReal> theta;   // size ntheta
  std::vector<WorkReal> costh;   // cos(theta_k)
  std::vector<WorkReal> sinth;   // sin(theta_k)
  std::vector<WorkReal> r;       // decompactified radius per rho_j
  std::vector<WorkReal> rstar;   // tortoise per rho_j
  int horizon_index = 0;         // radial index nearest rho_+

  int index(int j, int k) const { return j + nrho * k; }
};

// default inner boundary: excision at rho_+ - 1/20 (both characteristic
// families non-incoming there); the overload admits a deeper excision for
// boundary-sensitivity studies
Grid make_grid(int nrho, int ntheta, const PhysicalParams& p);
Grid make_grid(int nrho, int ntheta, const PhysicalParams& p,
               const WorkReal& rho_min);

// Per-gridpoint coefficients of the first-order system
//   d_tau Psi = pi - b d_rho Psi
//   d_tau pi  = -lam d_rho pi + W d_rho Psi + BT pi + C Psi
//               + ath (d_thth + cot(th) d_th) Psi
// where b and lam are the ingoing/outgoing characteristic speeds (roots of
// v^2 + P v - R = 0), W = lam b' + BR - BT b, and BT, BR, C are complex.
// Storage is structure-of-arrays indexed j + nrho*k.  The normalized
// second-order coefficients (P, R, BT, BR, C, ath) are kept as well; tests
// and diagnostics use them.
struct CoefficientSet {
  int nrho = 0;
  int ntheta = 0;
  // first-order entries
  std::vector<WorkReal> b, lam;
  std::vector<WorkReal> w_re, w_im;    // coefficient of d_rho Psi in the pi row
  std::vector<WorkReal> bt_re, bt_im;  // coefficient of pi
  std::vector<WorkReal> c_re, c_im;    // coefficient of Psi
  std::vector<WorkReal> ath;           // scale of (d_thth + cot th d_th)
  std::vector<WorkReal> cotth;         // per theta-row cot(theta_k), size ntheta
  // normalized second-order intermediates
  std::vector<WorkReal> p_mix, r_rad;  // A~^taurho, A~^rhorho
  std::vector<WorkReal> br_re, br_im;
  std::vector<WorkReal> bprime;        // db/drho
  WorkReal max_speed{0.0};             // max over grid of max(|b|, |lam|)

  int index(int j, int k) const { return j + nrho * k; }
};

// Assembles all coefficients; throws std::runtime_error with the offending
// location if the square-root argument P^2 + 4R turns negative.
CoefficientSet assemble_coefficients(const Grid& g, const PhysicalParams& p);

}  // namespace hweno
