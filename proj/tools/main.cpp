#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hweno/diagnostics.hpp"
#include "hweno/driver.hpp"
#include "hweno/evolve.hpp"
#include "hweno/harness.hpp"
#include "hweno/io.hpp"

using namespace hweno;
namespace fs = std::filesystem;

namespace {

struct CommonFlags {
  std::string config_path, output_dir, scheme_s, precision_s;
  double until = -1.0;
  int workers = -1;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "configuration file");
  cmd->add_option("--until", f.until, "override time.tau_end");
  cmd->add_option("--output", f.output_dir, "override output.directory");
  cmd->add_option("--workers", f.workers,
                  "worker threads (fallback: HORIZON_WENO_WORKERS)");
  cmd->add_option("--scheme", f.scheme_s, "override scheme.scheme")
      ->check(CLI::IsMember({"weno5", "weno3", "fd6ko"}));
  cmd->add_option("--precision", f.precision_s, "override scheme.precision")
      ->check(CLI::IsMember({"full", "mixed"}));
}

RunConfig resolve_config(const CommonFlags& f) {
  RunConfig cfg =
      f.config_path.empty() ? default_config() : load_config(f.config_path);
  if (f.until > 0.0) {
    cfg.tau_end = f.until;
    if (cfg.window_t1 > cfg.tau_end) {
      cfg.window_t1 = cfg.tau_end;
      cfg.window_t0 = std::min(cfg.window_t0, cfg.window_t1 * 0.8);
    }
  }
  if (!f.output_dir.empty()) cfg.output.directory = f.output_dir;
  if (f.scheme_s == "weno5") cfg.scheme.scheme = Scheme::weno5;
  else if (f.scheme_s == "weno3") cfg.scheme.scheme = Scheme::weno3;
  else if (f.scheme_s == "fd6ko") cfg.scheme.scheme = Scheme::fd6ko;
  if (f.precision_s == "full") cfg.scheme.mode = PrecisionMode::full;
  else if (f.precision_s == "mixed") cfg.scheme.mode = PrecisionMode::mixed;
  if (f.workers > 0) {
    cfg.workers = f.workers;
  } else if (const char* env = std::getenv("HORIZON_WENO_WORKERS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1)
      cfg.workers = static_cast<int>(n);
  }
  cfg.validate();
  return cfg;
}

int cmd_run(const CommonFlags& f, const std::string& seed_path) {
  RunConfig cfg = resolve_config(f);
  RunOutput ro = execute_run(cfg, cfg.output.directory, seed_path);
  std::cout << "run: " << ro.stats.steps_done << " steps, dt "
            << to_double(ro.dt) << ", wall " << ro.stats.wall_seconds
            << " s, artifacts in " << cfg.output.directory << "\n";
  if (ro.stats.blew_up) {
    std::cerr << "error: run: inadmissible state at step "
              << ro.stats.blowup_step << " (tau="
              << to_double(WorkReal(double(ro.stats.blowup_step)) * ro.dt)
              << "); post-mortem state in " << cfg.output.directory << "\n";
    return 3;
  }
  return 0;
}

int cmd_inspect(const CommonFlags& f) {
  RunConfig cfg = resolve_config(f);
  Grid g = make_grid(cfg.nrho, cfg.ntheta, cfg.phys);
  CoefficientSet cs = assemble_coefficients(g, cfg.phys);
  WorkReal dt = select_dt(g, cs, cfg.stepper);
  std::cout << render_config(cfg);
  std::cout << "\n# rho_+ = " << to_double(horizon_rho(cfg.phys))
            << " (r_+ = " << to_double(horizon_radius(cfg.phys)) << ")\n";
  std::cout << "# horizon index = " << g.horizon_index << "\n";
  std::cout << "# drho = " << to_double(g.drho)
            << ", dtheta = " << to_double(g.dtheta) << "\n";
  std::cout << "# max characteristic speed = " << to_double(cs.max_speed)
            << "\n";
  std::cout << "# dt = " << to_double(dt) << "\n";
  std::cout << "# steps to tau_end = " << steps_for(dt, cfg.tau_end) << "\n";
  double mib = double(FieldLayout{cfg.nrho, cfg.ntheta}.size()) *
               sizeof(WorkReal) / (1024.0 * 1024.0);
  std::cout << "# state memory = " << mib << " MiB per copy\n";
  std::cout << "# config hash = ";
  char hx[20];
  std::snprintf(hx, sizeof(hx), "%016llx",
                static_cast<unsigned long long>(config_hash(cfg)));
  std::cout << hx << "\n";
  return 0;
}

int cmd_compare_precision(const CommonFlags& f) {
  RunConfig base = resolve_config(f);
  fs::path outdir = base.output.directory;
  RunConfig cfull = base, cmix = base;
  cfull.scheme.mode = PrecisionMode::full;
  cmix.scheme.mode = PrecisionMode::mixed;
  RunOutput rfull = execute_run(cfull, (outdir / "full").string());
  RunOutput rmix = execute_run(cmix, (outdir / "mixed").string());
  if (rfull.stats.blew_up || rmix.stats.blew_up) {
    std::cerr << "error: compare-precision: a twin run aborted\n";
    return 3;
  }

  Grid g = make_grid(base.nrho, base.ntheta, base.phys);
  FieldLayout lay{base.nrho, base.ntheta};
  const int kobs = base.ntheta / 2;
  const WorkReal floorv{1e-35};
  std::ofstream prof(outdir / "compare_profile.csv");
  prof << "rho,rel_psi,rel_pi\n";
  double max_rel = 0.0, horizon_rel = 0.0;
  HorizonSampler hs(g, base.phys, lay, kobs);
  CxW hf = hs.sample(rfull.final_state).phi;
  CxW hm = hs.sample(rmix.final_state).phi;
  horizon_rel = to_double(cx_abs(hf - hm) /
                          (cx_abs(hf) > floorv ? cx_abs(hf) : floorv));
  for (int j = 0; j < base.nrho; ++j) {
    CxW fps = state_sample(rfull.final_state, lay, j, kobs);
    CxW mps = state_sample(rmix.final_state, lay, j, kobs);
    CxW fpi{rfull.final_state[lay.at(2, j, kobs)],
            rfull.final_state[lay.at(3, j, kobs)]};
    CxW mpi{rmix.final_state[lay.at(2, j, kobs)],
            rmix.final_state[lay.at(3, j, kobs)]};
    WorkReal dps = cx_abs(fps - mps) /
                   (cx_abs(fps) > floorv ? cx_abs(fps) : floorv);
    WorkReal dpi = cx_abs(fpi - mpi) /
                   (cx_abs(fpi) > floorv ? cx_abs(fpi) : floorv);
    prof << dd_format(g.rho[j]) << ',' << dd_format(dps) << ','
         << dd_format(dpi) << '\n';
    max_rel = std::max({max_rel, to_double(dps), to_double(dpi)});
  }
  double speedup = rfull.stats.wall_seconds /
                   std::max(1e-9, rmix.stats.wall_seconds);
  {
    std::ofstream rep(outdir / "report.csv");
    rep << "key,value\n";
    rep << "speedup," << speedup << "\n";
    rep << "horizon_rel_diff," << horizon_rel << "\n";
    rep << "max_rel_diff," << max_rel << "\n";
    rep << "wall_full," << rfull.stats.wall_seconds << "\n";
    rep << "wall_mixed," << rmix.stats.wall_seconds << "\n";
  }
  std::cout << "compare-precision: speedup " << speedup
            << "x, horizon relative difference " << horizon_rel
            << ", profile in " << (outdir / "compare_profile.csv").string()
            << "\n";
  return 0;
}

int cmd_bench_scaling(const CommonFlags& f, std::vector<int> counts,
                      long steps) {
  RunConfig cfg = resolve_config(f);
  if (counts.empty()) counts = {1, 2, 4, 8};
  Grid g = make_grid(cfg.nrho, cfg.ntheta, cfg.phys);
  CoefficientSet cs = assemble_coefficients(g, cfg.phys);
  WorkReal dt = select_dt(g, cs, cfg.stepper);
  SampleHook none;
  none.every = steps + 1;

  fs::create_directories(cfg.output.directory);
  std::ofstream rep(fs::path(cfg.output.directory) / "scaling.csv");
  char hash[24];
  std::snprintf(hash, sizeof hash, "%016llx",
                (unsigned long long)config_hash(cfg));
  rep << "workers,wall_seconds,efficiency,identical,config_hash\n";
  double t1 = 0.0;
  StateVec ref;
  bool all_identical = true;
  for (size_t i = 0; i < counts.size(); ++i) {
    int n = counts[i];
    WorkerPool pool(n);
    EvolutionRhs rhs(g, cs, cfg.phys, cfg.scheme, pool);
    StateVec u = initial_data(g, cs, cfg.phys, cfg.init);
    RunStats st = advance_steps(rhs, cfg.stepper, u, dt, 0, steps, none,
                                pool);
    if (st.blew_up) {
      std::cerr << "error: bench-scaling: workload aborted\n";
      return 3;
    }
    bool same = true;
    if (i == 0) {
      t1 = st.wall_seconds * counts[0];
      ref = u;
    } else {
      for (size_t q = 0; q < u.size(); ++q)
        if (u[q].hi != ref[q].hi || u[q].lo != ref[q].lo) {
          same = false;
          break;
        }
      all_identical = all_identical && same;
    }
    double eff = t1 / (double(n) * st.wall_seconds);
    rep << n << ',' << st.wall_seconds << ',' << eff << ','
        << (same ? 1 : 0) << ',' << hash << '\n';
    std::cout << "workers " << n << ": " << st.wall_seconds << " s, efficiency "
              << eff << (same ? "" : ", OUTPUT DIFFERS") << "\n";
  }
  if (!all_identical) {
    std::cerr << "error: bench-scaling: outputs differ across worker counts\n";
    return 2;
  }
  return 0;
}

int cmd_verify(const CommonFlags& f, const std::string& suite, bool fault) {
  (void)f;
  VerifyOptions opt;
  opt.suite_filter = suite;
  opt.inject_stencil_fault = fault;
  std::vector<VerifyResult> results = run_verify_suites(opt);
  size_t wname = 0;
  for (const VerifyResult& r : results) wname = std::max(wname, r.name.size());
  bool all = true;
  for (const VerifyResult& r : results) {
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name
              << std::string(wname + 2 - r.name.size(), ' ') << r.detail
              << "\n";
    all = all && r.pass;
  }
  if (!all) {
    for (const VerifyResult& r : results)
      if (!r.pass)
        std::cerr << "error: verify: " << r.name << " failed (" << r.detail
                  << ")\n";
    return 2;
  }
  std::cout << "verify: all " << results.size() << " checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "horizon-weno: mixed-precision WENO evolution of the first-order "
      "Teukolsky system on hyperboloidal slices"};
  app.require_subcommand(1);

  CommonFlags frun, finspect, fcmp, fbench, fverify;
  std::string seed_path, verify_suite;
  std::vector<int> bench_counts;
  long bench_steps = 200;
  bool verify_fault = false;

  CLI::App* run = app.add_subcommand("run", "advance a configuration");
  add_common(run, frun);
  run->add_option("--seed-snapshot", seed_path,
                  "start from a snapshot CSV instead of the Gaussian");

  CLI::App* inspect =
      app.add_subcommand("inspect", "print the resolved configuration");
  add_common(inspect, finspect);

  CLI::App* cmp = app.add_subcommand(
      "compare-precision", "twin full/mixed runs with difference profile");
  add_common(cmp, fcmp);

  CLI::App* bench = app.add_subcommand(
      "bench-scaling", "fixed workload across worker counts");
  add_common(bench, fbench);
  bench->add_option("--counts", bench_counts, "worker counts (default 1 2 4 8)");
  bench->add_option("--steps", bench_steps, "workload steps (default 200)");

  CLI::App* verify = app.add_subcommand(
      "verify", "convergence, property, and manufactured-solution suites");
  add_common(verify, fverify);
  verify->add_option("--suite", verify_suite,
                     "only run suites whose name contains this substring");
  verify
      ->add_flag("--inject-stencil-fault", verify_fault,
                 "deliberately break a reconstruction table (self-test)")
      ->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(frun, seed_path);
    if (inspect->parsed()) return cmd_inspect(finspect);
    if (cmp->parsed()) return cmd_compare_precision(fcmp);
    if (bench->parsed()) return cmd_bench_scaling(fbench, bench_counts,
                                                  bench_steps);
    if (verify->parsed()) return cmd_verify(fverify, verify_suite,
                                            verify_fault);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
