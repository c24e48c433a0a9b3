#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hweno/diagnostics.hpp"
#include "support/artifacts.hpp"
#include "support/criteria.hpp"
#include "support/run_specs.hpp"

using namespace hweno;

// Schwarzschild scalar l = 2 tail observed at r = 20 M (rho = 10).  The
// expected finite-radius index is -(2 l + 3) = -7.  The gate is evaluated on
// the projected l = 2 series, which is immune to the slow buildup of other
// multipoles from angular truncation; the raw point sample is reported next
// to it.

TEST_CASE("criterion 11: Schwarzschild scalar l=2 tail index") {
  artifacts::RunData r = artifacts::ensure_run(kSpecPriceSchw, "price_schw");
  const double t0 = r.cfg.window_t0, t1 = r.cfg.window_t1;
  TimeSeries p_proj = local_power_index(r.series("proj"));
  TimeSeries p_obs = local_power_index(r.series("obs"));
  double mproj = to_double(window_mean_re(p_proj, t0, t1));
  double mobs = to_double(window_mean_re(p_obs, t0, t1));
  bool pass = mproj >= -7.5 && mproj <= -6.5;
  criterion_line(11, pass,
                 "l=2 tail at r=20M over tau=[%.0f,%.0f]: projected index "
                 "%.4f (gate [-7.5,-6.5]); raw point-sample index %.4f",
                 t0, t1, mproj, mobs);
  CHECK(mproj >= -7.5);
  CHECK(mproj <= -6.5);
}
