#include "hweno/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace hweno {

namespace fs = std::filesystem;

int nearest_rho_index(const Grid& g, const WorkReal& rho) {
  double t = (to_double(rho) - to_double(g.rho_min)) / to_double(g.drho);
  long j = std::lround(t);
  if (j < 0) j = 0;
  if (j >= g.nrho) j = g.nrho - 1;
  return static_cast<int>(j);
}

RunOutput execute_run(const RunConfig& cfg, const std::string& outdir_s,
                      const std::string& seed_path) {
  const fs::path outdir = outdir_s;
  fs::create_directories(outdir);
  {
    std::ofstream c(outdir / "config.ini");
    c << render_config(cfg);
  }
  Grid g = make_grid(cfg.nrho, cfg.ntheta, cfg.phys);
  CoefficientSet cs = assemble_coefficients(g, cfg.phys);
  WorkerPool pool(cfg.workers);
  EvolutionRhs rhs(g, cs, cfg.phys, cfg.scheme, pool);
  const FieldLayout lay = rhs.layout();
  StateVec u = seed_path.empty()
                   ? initial_data(g, cs, cfg.phys, cfg.init)
                   : read_snapshot_csv(seed_path, lay);

  RunOutput ro;
  ro.dt = select_dt(g, cs, cfg.stepper);
  ro.steps = steps_for(ro.dt, cfg.tau_end);
  const long stride = sample_stride(ro.dt, cfg.output.series_cadence);
  const long prog = std::max<long>(1, ro.steps / 50);
  const long chk = cfg.output.checkpoint_cadence > 0.0
                       ? sample_stride(ro.dt, cfg.output.checkpoint_cadence)
                       : 0;
  const long snap = cfg.output.snapshot_cadence > 0.0
                        ? sample_stride(ro.dt, cfg.output.snapshot_cadence)
                        : 0;
  const int kobs = cfg.ntheta / 2;
  const int jobs = nearest_rho_index(g, cfg.output.observer_rho);
  HorizonSampler hs(g, cfg.phys, lay, kobs);

  ro.phi.label = "phi";
  ro.dphi1.label = "dphi1";
  ro.dphi2.label = "dphi2";
  ro.dphi3.label = "dphi3";
  ro.obs.label = "obs";
  ro.proj.label = "proj";
  ro.scri.label = "scri";

  SampleHook hook;
  hook.every = stride;
  hook.fn = [&](long step, const WorkReal& tau, const StateVec& s) {
    HorizonObservables ob = hs.sample(s);
    ro.phi.push(tau, ob.phi.re, ob.phi.im);
    ro.dphi1.push(tau, ob.dphi[0].re, ob.dphi[0].im);
    ro.dphi2.push(tau, ob.dphi[1].re, ob.dphi[1].im);
    ro.dphi3.push(tau, ob.dphi[2].re, ob.dphi[2].im);
    CxW o = state_sample(s, lay, jobs, kobs);
    ro.obs.push(tau, o.re, o.im);
    ro.proj.push(tau,
                 multipole_project(theta_slice(s, lay, 0, jobs),
                                   cfg.phys.spin, cfg.phys.mmode,
                                   cfg.init.ell),
                 multipole_project(theta_slice(s, lay, 1, jobs),
                                   cfg.phys.spin, cfg.phys.mmode,
                                   cfg.init.ell));
    CxW sc = state_sample(s, lay, lay.nrho - 1, kobs);
    ro.scri.push(tau, sc.re, sc.im);
    if (step % prog == 0)
      std::cerr << "step " << step << "/" << ro.steps
                << " tau=" << to_double(tau) << "\n";
    if (chk > 0 && step > 0 && step % chk == 0)
      write_checkpoint((outdir / "checkpoint_latest.txt").string(), cfg, step,
                       tau, lay, s);
    if (snap > 0 && step > 0 && step % snap == 0)
      write_snapshot_csv(
          (outdir / ("snapshot_" + std::to_string(step) + ".csv")).string(),
          g, lay, s, tau);
  };

  ro.stats = advance_steps(rhs, cfg.stepper, u, ro.dt, 0, ro.steps, hook,
                           pool);
  ro.final_state = std::move(u);
  ro.final_step = ro.stats.steps_done;
  WorkReal tau_final = WorkReal(double(ro.final_step)) * ro.dt;

  TimeSeries p = local_power_index(ro.phi);
  write_timeseries_csv((outdir / "timeseries.csv").string(), ro.phi, ro.dphi1,
                       ro.dphi2, p);
  write_series_table((outdir / "observables.csv").string(),
                     {&ro.dphi3, &ro.obs, &ro.proj, &ro.scri});
  write_snapshot_csv((outdir / "final_snapshot.csv").string(), g, lay,
                     ro.final_state, tau_final);
  write_checkpoint((outdir / "checkpoint_final.txt").string(), cfg,
                   ro.final_step, tau_final, lay, ro.final_state);
  {
    std::ofstream m(outdir / "meta.csv");
    char hx[20];
    std::snprintf(hx, sizeof(hx), "%016llx",
                  static_cast<unsigned long long>(config_hash(cfg)));
    m << "key,value\n";
    m << "config_hash," << hx << "\n";
    m << "scheme,"
      << (cfg.scheme.scheme == Scheme::weno5
              ? "weno5"
              : cfg.scheme.scheme == Scheme::weno3 ? "weno3" : "fd6ko")
      << "\n";
    m << "precision,"
      << (cfg.scheme.mode == PrecisionMode::mixed ? "mixed" : "full") << "\n";
    m << "stepper,"
      << (cfg.stepper.kind == StepperSpec::ssprk33 ? "ssprk33" : "ssprk104")
      << "\n";
    m << "nrho," << cfg.nrho << "\n";
    m << "ntheta," << cfg.ntheta << "\n";
    m << "workers," << cfg.workers << "\n";
    m << "dt," << dd_format(ro.dt) << "\n";
    m << "steps," << ro.stats.steps_done << "\n";
    m << "planned_steps," << ro.steps << "\n";
    m << "tau_final," << dd_format(tau_final) << "\n";
    m << "wall_seconds," << ro.stats.wall_seconds << "\n";
    m << "blew_up," << (ro.stats.blew_up ? 1 : 0) << "\n";
    m << "blowup_step," << ro.stats.blowup_step << "\n";
  }
  return ro;
}

}  // namespace hweno
