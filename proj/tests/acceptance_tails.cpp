#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "hweno/diagnostics.hpp"
#include "support/artifacts.hpp"
#include "support/criteria.hpp"
#include "support/run_specs.hpp"

using namespace hweno;
using artifacts::RunData;
using artifacts::ensure_run;

// The four finished tail runs share one configuration (2048 x 32, extremal
// Kerr, s = -2, l = 2, Gaussian center 1.0 / width 0.22, tau_end = 500) and
// differ only in scheme or precision; the fifth turns dissipation off.
// ensure_run reuses the artifacts under runs/ when their config hash matches
// and regenerates them otherwise.

TEST_CASE("criterion 7: extremal horizon-tail power laws") {
  RunData r = ensure_run(kSpecTailWeno5Mixed, "tail_weno5_mixed");
  const double t0 = r.cfg.window_t0, t1 = r.cfg.window_t1;
  TimeSeries p_phi = local_power_index(r.series("phi"));
  TimeSeries p_dphi = local_power_index(r.series("dphi1"));
  double mp = to_double(window_mean_re(p_phi, t0, t1));
  double md = to_double(window_mean_re(p_dphi, t0, t1));
  bool pass = mp >= -1.15 && mp <= -0.85 && md >= -0.15 && md <= 0.15;
  criterion_line(7, pass,
                 "weno5 2048x32 tau=[%.0f,%.0f]: mean p(phi) = %.4f (gate "
                 "[-1.15,-0.85]), mean p(phi') = %.4f (gate [-0.15,0.15])",
                 t0, t1, mp, md);
  CHECK(mp >= -1.15);
  CHECK(mp <= -0.85);
  CHECK(md >= -0.15);
  CHECK(md <= 0.15);
}

TEST_CASE("criterion 8: scheme ranking and undissipated instability") {
  RunData w5 = ensure_run(kSpecTailWeno5Mixed, "tail_weno5_mixed");
  RunData w3 = ensure_run(kSpecTailWeno3Mixed, "tail_weno3_mixed");
  RunData f6 = ensure_run(kSpecTailFd6koMixed, "tail_fd6ko_mixed");
  RunData nd = ensure_run(kSpecFd6koNodiss, "fd6ko_nodiss",
                          /*expect_blowup=*/true);
  const double t0 = w5.cfg.window_t0, t1 = w5.cfg.window_t1;
  auto dev = [&](const RunData& r) {
    return artifacts::window_mean_abs_shift(
        local_power_index(r.series("phi")), 1.0, t0, t1);
  };
  double d5 = dev(w5), d3 = dev(w3), d6 = dev(f6);
  bool unstable = nd.meta.at("blew_up") == "1";
  bool pass = d5 <= d3 && d3 <= d6 && unstable;
  criterion_line(8, pass,
                 "window-averaged |p(phi)+1|: weno5 %.4f <= weno3 %.4f <= "
                 "fd6ko(sigma=0.01) %.4f required; fd6ko(sigma=0) unstable: "
                 "%s (blow-up at step %s of %s)",
                 d5, d3, d6, unstable ? "yes" : "NO",
                 nd.meta.at("blowup_step").c_str(),
                 nd.meta.at("planned_steps").c_str());
  CHECK(d5 <= d3);
  CHECK(d3 <= d6);
  CHECK(unstable);
}

TEST_CASE("criterion 9: mixed-precision fidelity and speedup") {
  RunData mx = ensure_run(kSpecTailWeno5Mixed, "tail_weno5_mixed");
  RunData fl = ensure_run(kSpecTailWeno5Full, "tail_weno5_full");
  const TimeSeries& pm = mx.series("phi");
  const TimeSeries& pf = fl.series("phi");
  REQUIRE(pm.size() == pf.size());
  size_t last = pm.size() - 1;
  REQUIRE(to_double(pm.tau[last]) == to_double(pf.tau[last]));
  WorkReal diff = sqrt((pm.re[last] - pf.re[last]) * (pm.re[last] - pf.re[last]) +
                       (pm.im[last] - pf.im[last]) * (pm.im[last] - pf.im[last]));
  WorkReal mag = sqrt(pf.re[last] * pf.re[last] + pf.im[last] * pf.im[last]);
  double rel = to_double(diff / mag);
  double speedup = fl.meta_num("wall_seconds") / mx.meta_num("wall_seconds");
  bool pass = rel < 1e-4 && speedup > 1.5;
  criterion_line(9, pass,
                 "horizon sample at tau_end: |mixed - full| / |full| = %.3e "
                 "(gate < 1e-4); speedup full/mixed = %.2fx (gate > 1.5; "
                 "reference figure on production hardware: 3.3x)",
                 rel, speedup);
  CHECK(rel < 1e-4);
  CHECK(speedup > 1.5);
}

TEST_CASE("criterion 10: horizon-charge constancy") {
  RunData r = ensure_run(kSpecTailWeno5Mixed, "tail_weno5_mixed");
  const double t0 = r.cfg.window_t0, t1 = r.cfg.window_t1;
  double drift = to_double(window_rel_drift(r.series("dphi1"), t0, t1));
  bool pass = drift <= 0.15;
  criterion_line(10, pass,
                 "|d_rho phi| at the horizon over tau=[%.0f,%.0f]: relative "
                 "drift %.4f (gate <= 0.15)",
                 t0, t1, drift);
  CHECK(drift <= 0.15);
}
