#include "hweno/evolve.hpp"

#include <chrono>
#include <stdexcept>

#include "hweno/angular.hpp"

namespace hweno {

EvolutionRhs::EvolutionRhs(const Grid& g, const CoefficientSet& cs,
                           const PhysicalParams& p, const SchemeSpec& spec,
                           WorkerPool& pool)
    : cs_(&cs), spec_(spec), pool_(&pool), drho_(g.drho), dtheta_(g.dtheta) {
  lay_.nrho = g.nrho;
  lay_.ntheta = g.ntheta;
  if (g.nrho < 2 * kRadialGhost + 1 || g.ntheta < kAngularGhost)
    throw std::invalid_argument("EvolutionRhs: grid below stencil support");
  parity_ = ((p.mmode + p.spin) % 2 == 0) ? 1 : -1;
  // pi rows are upwinded by the sign of lam; the geometries in scope give
  // lam < 0 on [0, split) and lam >= 0 on [split, nrho) for every theta row
  split_.resize(g.ntheta);
  for (int k = 0; k < g.ntheta; ++k) {
    int sp = 0;
    while (sp < g.nrho && cs.lam[cs.index(sp, k)].hi < 0.0) ++sp;
    for (int j = sp; j < g.nrho; ++j)
      if (cs.lam[cs.index(j, k)].hi < 0.0)
        throw std::runtime_error(
            "EvolutionRhs: lam changes sign more than once along a row");
    split_[k] = sp;
  }
  size_t interior = size_t(g.nrho) * g.ntheta;
  dps_r_.resize(interior);
  dps_i_.resize(interior);
  dpi_r_.resize(interior);
  dpi_i_.resize(interior);
  ang_r_.resize(interior);
  ang_i_.resize(interior);
}

void EvolutionRhs::apply_boundaries(StateVec& u) const {
  const int n = lay_.nrho, nt = lay_.ntheta;
  const long long w = lay_.width();
  const bool even = parity_ > 0;
  // radial ghosts: cubic continuation of the last four interior samples
  pool_->run(size_t(nt), [&](size_t kb, size_t ke) {
    for (size_t k = kb; k < ke; ++k)
      for (int c = 0; c < kComponents; ++c) {
        WorkReal* p = u.data() + lay_.at(c, 0, int(k));
        for (int t = 1; t <= kRadialGhost; ++t)
          p[-t] = WorkReal(4) * p[-t + 1] - WorkReal(6) * p[-t + 2] +
                  WorkReal(4) * p[-t + 3] - p[-t + 4];
        WorkReal* q = p + n - 1;
        for (int t = 1; t <= kRadialGhost; ++t)
          q[t] = WorkReal(4) * q[t - 1] - WorkReal(6) * q[t - 2] +
                 WorkReal(4) * q[t - 3] - q[t - 4];
      }
  });
  // theta ghosts: parity reflection across both poles (staggered grid)
  pool_->run(size_t(n), [&](size_t jb, size_t je) {
    for (size_t j = jb; j < je; ++j)
      for (int c = 0; c < kComponents; ++c) {
        WorkReal* base = u.data() + lay_.at(c, int(j), 0);
        for (int t = 0; t < kAngularGhost; ++t) {
          const WorkReal& north = base[(long long)t * w];
          const WorkReal& south = base[(long long)(nt - 1 - t) * w];
          base[-(long long)(1 + t) * w] = even ? north : -north;
          base[(long long)(nt + t) * w] = even ? south : -south;
        }
      }
  });
}

template <class TW>
void EvolutionRhs::run_rhs(const StateVec& u, StateVec& du) {
  const int n = lay_.nrho, nt = lay_.ntheta;
  const long long w = lay_.width();
  const WorkReal drho = drho_;
  TW eps;
  if constexpr (std::is_same_v<TW, WeightReal>)
    eps = demote(spec_.eps);
  else
    eps = spec_.eps;
  const WorkReal sigma = spec_.sigma;
  const Scheme sch = spec_.scheme;
  const CoefficientSet& cs = *cs_;

  // phase 1: radial derivatives, one theta row at a time
  pool_->run(size_t(nt), [&](size_t kb, size_t ke) {
    for (size_t k = kb; k < ke; ++k) {
      const WorkReal* rows[kComponents];
      for (int c = 0; c < kComponents; ++c)
        rows[c] = u.data() + lay_.at(c, 0, int(k));
      WorkReal* out[kComponents] = {
          dps_r_.data() + k * n, dps_i_.data() + k * n,
          dpi_r_.data() + k * n, dpi_i_.data() + k * n};
      if (sch == Scheme::fd6ko) {
        for (int c = 0; c < kComponents; ++c)
          fd6_row_derivative(rows[c], n, drho, out[c]);
        continue;
      }
      const int sp = split_[k];
      if (sch == Scheme::weno5) {
        weno5_row_derivative(rows[0], n, drho, eps, true, out[0]);
        weno5_row_derivative(rows[1], n, drho, eps, true, out[1]);
        for (int c = 2; c < kComponents; ++c) {
          if (sp > 0) weno5_row_derivative(rows[c], sp, drho, eps, true, out[c]);
          if (sp < n)
            weno5_row_derivative(rows[c] + sp, n - sp, drho, eps, false,
                                 out[c] + sp);
        }
      } else {
        weno3_row_derivative(rows[0], n, drho, eps, true, out[0]);
        weno3_row_derivative(rows[1], n, drho, eps, true, out[1]);
        for (int c = 2; c < kComponents; ++c) {
          if (sp > 0) weno3_row_derivative(rows[c], sp, drho, eps, true, out[c]);
          if (sp < n)
            weno3_row_derivative(rows[c] + sp, n - sp, drho, eps, false,
                                 out[c] + sp);
        }
      }
    }
  });

  // phase 2: theta operator (d_thth + cot th d_th) on the Psi components
  pool_->run(size_t(n), [&](size_t jb, size_t je) {
    std::vector<WorkReal> d1(nt), d2(nt);
    for (size_t j = jb; j < je; ++j) {
      for (int c = 0; c < 2; ++c) {
        const WorkReal* col = u.data() + lay_.at(c, int(j), 0);
        theta_derivatives_column(col, nt, w, dtheta_, d1.data(), d2.data());
        std::vector<WorkReal>& ang = (c == 0) ? ang_r_ : ang_i_;
        for (int k = 0; k < nt; ++k)
          ang[j + size_t(k) * n] = d2[k] + cs.cotth[k] * d1[k];
      }
    }
  });

  // phase 3: pointwise assembly (plus dissipation for fd6ko)
  pool_->run(size_t(nt), [&](size_t kb, size_t ke) {
    std::vector<WorkReal> q(sch == Scheme::fd6ko ? n : 0);
    for (size_t k = kb; k < ke; ++k) {
      const size_t ci = size_t(k) * n;
      const WorkReal *psr = u.data() + lay_.at(0, 0, int(k)),
                     *psi = u.data() + lay_.at(1, 0, int(k)),
                     *pir = u.data() + lay_.at(2, 0, int(k)),
                     *pii = u.data() + lay_.at(3, 0, int(k));
      WorkReal *d0 = du.data() + lay_.at(0, 0, int(k)),
               *d1 = du.data() + lay_.at(1, 0, int(k)),
               *d2 = du.data() + lay_.at(2, 0, int(k)),
               *d3 = du.data() + lay_.at(3, 0, int(k));
      const WorkReal *b = cs.b.data() + ci, *lam = cs.lam.data() + ci,
                     *wre = cs.w_re.data() + ci, *wim = cs.w_im.data() + ci,
                     *btr = cs.bt_re.data() + ci, *bti = cs.bt_im.data() + ci,
                     *cre = cs.c_re.data() + ci, *cim = cs.c_im.data() + ci,
                     *ath = cs.ath.data() + ci;
      const WorkReal *Dsr = dps_r_.data() + ci, *Dsi = dps_i_.data() + ci,
                     *Dpr = dpi_r_.data() + ci, *Dpi = dpi_i_.data() + ci,
                     *Ar = ang_r_.data() + ci, *Ai = ang_i_.data() + ci;
      for (int j = 0; j < n; ++j) {
        d0[j] = pir[j] - b[j] * Dsr[j];
        d1[j] = pii[j] - b[j] * Dsi[j];
        d2[j] = -lam[j] * Dpr[j] + wre[j] * Dsr[j] - wim[j] * Dsi[j] +
                btr[j] * pir[j] - bti[j] * pii[j] + cre[j] * psr[j] -
                cim[j] * psi[j] + ath[j] * Ar[j];
        d3[j] = -lam[j] * Dpi[j] + wre[j] * Dsi[j] + wim[j] * Dsr[j] +
                btr[j] * pii[j] + bti[j] * pir[j] + cre[j] * psi[j] +
                cim[j] * psr[j] + ath[j] * Ai[j];
      }
      if (sch == Scheme::fd6ko) {
        const WorkReal* rows[kComponents] = {psr, psi, pir, pii};
        WorkReal* outs[kComponents] = {d0, d1, d2, d3};
        for (int c = 0; c < kComponents; ++c) {
          ko8_row(rows[c], n, sigma, drho, q.data());
          for (int j = 0; j < n; ++j) outs[c][j] = outs[c][j] - q[j];
        }
      }
    }
  });
}

void EvolutionRhs::operator()(StateVec& u, StateVec& du) {
  apply_boundaries(u);
  if (spec_.mode == PrecisionMode::full)
    run_rhs<WorkReal>(u, du);
  else
    run_rhs<WeightReal>(u, du);
}

StateVec initial_data(const Grid& g, const CoefficientSet& cs,
                      const PhysicalParams& p, const InitialDataSpec& id) {
  if (id.ell < std::abs(p.spin) || id.ell < std::abs(p.mmode))
    throw std::invalid_argument("initial_data: need ell >= max(|s|, |m|)");
  if (!(id.width.hi > 0.0))
    throw std::invalid_argument("initial_data: width must be positive");
  if (!((id.center - g.rho.front()).hi > 0.0 &&
        (g.rho.back() - id.center).hi > 0.0))
    throw std::invalid_argument("initial_data: center outside (rho_min, S)");
  FieldLayout lay{g.nrho, g.ntheta};
  StateVec u(lay.size());
  std::vector<WorkReal> prof(g.ntheta);
  for (int k = 0; k < g.ntheta; ++k)
    prof[k] = spin_ylm_theta(p.spin, id.ell, p.mmode, g.theta[k]);
  const WorkReal half(0.5);
  const WorkReal w2 = id.width * id.width;
  for (int j = 0; j < g.nrho; ++j) {
    WorkReal d = g.rho[j] - id.center;
    WorkReal gauss = id.amplitude * exp(-half * d * d / w2);
    WorkReal dgauss = -(d / w2) * gauss;
    for (int k = 0; k < g.ntheta; ++k) {
      u[lay.at(0, j, k)] = gauss * prof[k];
      u[lay.at(2, j, k)] = cs.b[cs.index(j, k)] * dgauss * prof[k];
    }
  }
  return u;
}

bool state_admissible(const StateVec& u, const FieldLayout& lay,
                      WorkerPool& pool, double limit) {
  const int n = lay.nrho, nt = lay.ntheta;
  std::vector<char> bad(nt, 0);
  pool.run(size_t(nt), [&](size_t kb, size_t ke) {
    for (size_t k = kb; k < ke; ++k) {
      char flag = 0;
      for (int c = 0; c < kComponents; ++c) {
        const WorkReal* row = u.data() + lay.at(c, 0, int(k));
        for (int j = 0; j < n; ++j)
          if (!(std::fabs(row[j].hi) <= limit)) flag = 1;
      }
      bad[k] = flag;
    }
  });
  for (int k = 0; k < nt; ++k)
    if (bad[k]) return false;
  return true;
}

RunStats advance_steps(EvolutionRhs& rhs, const StepperSpec& stepper,
                       StateVec& u, const WorkReal& dt, long step_begin,
                       long step_end, const SampleHook& hook,
                       WorkerPool& pool) {
  RunStats stats;
  StepScratch scr;
  PoolExec exec{&pool};
  auto t0 = std::chrono::steady_clock::now();
  for (long s = step_begin;; ++s) {
    if (hook.fn &&
        (s % hook.every == 0 || s == step_begin || s == step_end)) {
      WorkReal tau = WorkReal(double(s)) * dt;
      hook.fn(s, tau, u);
    }
    if (s == step_end) break;
    stepper_step(stepper, u, dt, rhs, scr, exec);
    if (!state_admissible(u, rhs.layout(), pool)) {
      stats.blew_up = true;
      stats.blowup_step = s + 1;
      stats.steps_done = s + 1 - step_begin;
      break;
    }
    stats.steps_done = s + 1 - step_begin;
  }
  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return stats;
}

}  // namespace hweno
