#pragma once

#include <string>
#include <vector>

#include "hweno/evolve.hpp"

namespace hweno {

// Least-squares slope of log(error) against log(1/N): err ~ C N^{-order}.
// Resolutions with error at or below the rounding floor are dropped from the
// fit (but kept in the report).  A sequence whose fitted errors fail to
// decrease at every refinement is flagged non-monotone (unreliable fit).
struct ConvergenceReport {
  std::vector<int> ns;
  std::vector<double> errors;
  double order = 0.0;
  bool monotone = true;
};

ConvergenceReport fit_order(std::vector<int> ns, std::vector<double> errors,
                            double floor = 1e-26);

// Periodic linear advection u_t + u_x = 0 of sin(2 pi x) on [0,1), advanced
// one full period; reports the max-norm error against the initial data per
// resolution.  inject_fault deliberately mistunes one optimal weight of the
// harness's own WENO5 reconstruction (negative self-test: the measured order
// must collapse).
ConvergenceReport advection_convergence(Scheme scheme,
                                        const std::vector<int>& ns,
                                        double eps, double sigma,
                                        bool inject_fault = false);

// Square-wave advection over one period: total-variation growth and the
// largest excursion outside the initial [0, 1] range.
struct EnoReport {
  double tv_growth = 0.0;
  double overshoot = 0.0;
};

EnoReport advection_square_wave(Scheme scheme, int n, double eps,
                                bool inject_fault = false);

// Scalar ODE u' = -u integrated to tau = 2 at a ladder of step counts; the
// report fits the global-error order against e^{-2}.
ConvergenceReport ode_convergence(StepperSpec::Kind kind,
                                  const std::vector<int>& ns);

// Max deviation of one SSP-RK(3,3) step on u' = z u (dt = 1) from the cubic
// Taylor polynomial 1 + z + z^2/2 + z^3/6, over a ring of complex z.
double rk33_amplification_error();

// Exactness probes for the centered stack: FD6 on a degree-6 polynomial,
// KO8 on a degree-7 polynomial (must annihilate), and the KO8 response to
// the sawtooth (-1)^j (must equal sigma (-1)^j / h pointwise).
struct Fd6Ko8Report {
  double fd6_poly_err = 0.0;
  double ko8_poly_err = 0.0;
  double sawtooth_err = 0.0;
};

Fd6Ko8Report fd6ko8_checks();

// Operator residual against manufactured radial Gaussians on the production
// coefficient set (extremal Kerr, s = -2), fitted across radial resolutions.
ConvergenceReport mms_orders(Scheme scheme, const std::vector<int>& ns,
                             int ntheta = 8);

// Refinement study of the centered theta stencils through the production
// ghost fill (parity reflection across both poles) on a smooth function of
// cos(theta); max-norm error over first and second derivatives.
ConvergenceReport theta_operator_convergence(const std::vector<int>& ns);

// Twin-domain reflection bound: the same pulse evolved on the production
// domain and on one whose excision sits a few cells deeper must agree on all
// shared interior points, so anything the boundaries send back is measured
// directly against the incident amplitude at the comparison-window edges.
struct BoundaryReflectionReport {
  double reflected_over_incident = 0.0;
  double incident = 0.0;
};

BoundaryReflectionReport boundary_reflection_check();

struct VerifyOptions {
  std::string suite_filter;          // substring match on suite names
  bool inject_stencil_fault = false;
};

struct VerifyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<VerifyResult> run_verify_suites(const VerifyOptions& opt);

}  // namespace hweno
