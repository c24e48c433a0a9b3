#pragma once

#include <string>

#include "hweno/diagnostics.hpp"
#include "hweno/evolve.hpp"
#include "hweno/io.hpp"

namespace hweno {

// Full production run: evolve cfg from its Gaussian (or a seed snapshot) to
// tau_end, sampling the horizon stencil, the observer point, the projected
// observer multipole, and scri at the series cadence, then write config.ini,
// timeseries.csv, observables.csv, final_snapshot.csv, checkpoint_final.txt,
// and meta.csv into outdir.  On blow-up the artifacts hold the post-mortem
// state and stats.blew_up is set.
struct RunOutput {
  RunStats stats;
  WorkReal dt{0.0};
  long steps = 0;       // planned
  long final_step = 0;  // reached
  TimeSeries phi, dphi1, dphi2, dphi3, obs, proj, scri;
  StateVec final_state;
};

RunOutput execute_run(const RunConfig& cfg, const std::string& outdir,
                      const std::string& seed_path = "");

// Interior radial index nearest to rho (clamped).
int nearest_rho_index(const Grid& g, const WorkReal& rho);

}  // namespace hweno
