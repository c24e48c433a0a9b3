#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "hweno/geometry.hpp"
#include "hweno/parallel.hpp"
#include "hweno/spatial.hpp"
#include "hweno/timestep.hpp"

namespace hweno {

inline constexpr int kRadialGhost = 4;   // covers the 9-point dissipation window
inline constexpr int kAngularGhost = 2;  // covers the 5-point theta stencils
inline constexpr int kComponents = 4;    // PsiR, PsiI, PiR, PiI

// Four field components stored in one flat StateVec so the generic steppers
// can treat the whole state elementwise.  Each component is a (nrho + 8) x
// (ntheta + 4) plane, row-major in rho, interior sample (j, k) at
// at(c, j, k); ghost indices j in [-4, -1] / [nrho, nrho+3] and k in
// [-2, -1] / [ntheta, ntheta+1] are valid arguments.
struct FieldLayout {
  int nrho = 0, ntheta = 0;

  int width() const { return nrho + 2 * kRadialGhost; }
  int height() const { return ntheta + 2 * kAngularGhost; }
  size_t plane() const { return size_t(width()) * size_t(height()); }
  size_t size() const { return size_t(kComponents) * plane(); }
  size_t at(int c, int j, int k) const {
    return size_t(c) * plane() +
           size_t(k + kAngularGhost) * size_t(width()) +
           size_t(j + kRadialGhost);
  }
};

struct SchemeSpec {
  Scheme scheme = Scheme::weno5;
  PrecisionMode mode = PrecisionMode::mixed;
  WorkReal eps{1e-6};    // WENO smoothness regularization
  WorkReal sigma{0.01};  // KO8 dissipation strength (fd6ko only)
};

struct InitialDataSpec {
  int ell = 2;
  WorkReal center{1.0};
  WorkReal width{0.22};  // Gaussian sigma in exp(-(rho-c)^2 / (2 w^2))
  WorkReal amplitude{1.0};
};

// Right-hand side of the first-order system on one grid.  operator() fills
// the ghost layers of u in place, then writes the interior of du; ghost
// entries of du are never touched (keep them zeroed).  All parallel phases
// write disjoint ranges, so results are bit-identical for any worker count.
class EvolutionRhs {
 public:
  EvolutionRhs(const Grid& g, const CoefficientSet& cs,
               const PhysicalParams& p, const SchemeSpec& spec,
               WorkerPool& pool);

  void operator()(StateVec& u, StateVec& du);
  void apply_boundaries(StateVec& u) const;

  const FieldLayout& layout() const { return lay_; }
  const SchemeSpec& scheme() const { return spec_; }

 private:
  template <class TW>
  void run_rhs(const StateVec& u, StateVec& du);

  FieldLayout lay_;
  const CoefficientSet* cs_;
  SchemeSpec spec_;
  WorkerPool* pool_;
  WorkReal drho_, dtheta_;
  int parity_;              // theta ghost sign (-1)^(m+s)
  std::vector<int> split_;  // per row: first j with lam >= 0
  // interior-sized scratch planes, indexed j + nrho*k
  std::vector<WorkReal> dps_r_, dps_i_;  // biased d_rho Psi
  std::vector<WorkReal> dpi_r_, dpi_i_;  // upwinded d_rho pi
  std::vector<WorkReal> ang_r_, ang_i_;  // (d_thth + cot th d_th) Psi
};

StateVec initial_data(const Grid& g, const CoefficientSet& cs,
                      const PhysicalParams& p, const InitialDataSpec& id);

// Interior scan for NaN or |u| > limit; deterministic (per-row flags, serial
// reduction).
bool state_admissible(const StateVec& u, const FieldLayout& lay,
                      WorkerPool& pool, double limit = 1e30);

struct SampleHook {
  std::function<void(long step, const WorkReal& tau, const StateVec& u)> fn;
  long every = 1;
};

struct RunStats {
  long steps_done = 0;
  double wall_seconds = 0.0;
  bool blew_up = false;
  long blowup_step = -1;
};

// Advances u from global step index step_begin to step_end with the fixed
// step dt (tau = step * dt throughout, so a restarted run retraces the
// unbroken one exactly).  The hook fires whenever u sits at a step index
// divisible by hook.every, plus the first and last step.  On blow-up the
// loop stops and u holds the inadmissible state for post-mortem writing.
RunStats advance_steps(EvolutionRhs& rhs, const StepperSpec& stepper,
                       StateVec& u, const WorkReal& dt, long step_begin,
                       long step_end, const SampleHook& hook,
                       WorkerPool& pool);

// Smallest step count n with n * dt >= tau_end (up to a 1e-9 slack for
// exactly representable quotients).
inline long steps_for(const WorkReal& dt, double tau_end) {
  long n = (long)std::ceil(tau_end / to_double(dt) - 1e-9);
  return n < 1 ? 1 : n;
}

inline long sample_stride(const WorkReal& dt, double cadence) {
  long n = std::lround(cadence / to_double(dt));
  return n < 1 ? 1 : n;
}

}  // namespace hweno
