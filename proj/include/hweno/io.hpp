#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hweno/diagnostics.hpp"
#include "hweno/evolve.hpp"
#include "hweno/geometry.hpp"
#include "hweno/timestep.hpp"

namespace hweno {

struct OutputSpec {
  std::string directory = "out";
  double series_cadence = 0.25;     // tau between time-series samples
  double snapshot_cadence = 0.0;    // 0 = no periodic snapshots
  double checkpoint_cadence = 0.0;  // 0 = final checkpoint only
  WorkReal observer_rho{10.0};      // finite-radius sample row
};

// Full description of one run.  Real-valued entries keep the literal text
// they were parsed from (lit, keyed "section.key"), so render_config emits
// the exact input spelling and a rendered config re-parses bit-identically.
struct RunConfig {
  PhysicalParams phys;  // defaults below turn on the extremal case
  int nrho = 2048, ntheta = 32;
  SchemeSpec scheme;
  StepperSpec stepper;
  InitialDataSpec init;
  double tau_end = 500.0;
  double window_t0 = 400.0, window_t1 = 500.0;  // tail measurement window
  OutputSpec output;
  int workers = 1;
  std::map<std::string, std::string> lit;

  void validate() const;  // throws std::invalid_argument naming the key
};

RunConfig default_config();

// Sets a real-valued field from its decimal text, remembering the literal.
// Key is the "section.key" name as written in config files.
void set_real(RunConfig& c, const std::string& key, const std::string& text);

RunConfig parse_config_text(const std::string& text,
                            const std::string& origin);
RunConfig load_config(const std::string& path);

// Canonical text form; parse_config_text(render_config(c)) reproduces c
// exactly (literals included).
std::string render_config(const RunConfig& c);

// FNV-1a over the evolution-defining subset (physics, grid, scheme,
// stepper): continuation parameters, output plumbing, and worker counts
// may differ between a checkpoint writer and its reader.
uint64_t config_hash(const RunConfig& c);

// Time-series CSV with the fixed column set
//   tau, phi_re, phi_im, dphi1_re, dphi1_im, dphi2_re, dphi2_im, p_index.
// The p column aligns with phi by tau and leaves masked entries blank.
void write_timeseries_csv(const std::string& path, const TimeSeries& phi,
                          const TimeSeries& dphi1, const TimeSeries& dphi2,
                          const TimeSeries& pindex);

// Generic series table: tau from the first series, then label_re/label_im
// per column.  All series must share the tau axis.
void write_series_table(const std::string& path,
                        const std::vector<const TimeSeries*>& cols);

// Reads either writer's output back: paired *_re/*_im headers fold into one
// complex series, lone columns stay real, blank cells become gaps.
std::vector<TimeSeries> read_series_csv(const std::string& path);

// Snapshot CSV: tau, rho, theta, psi_re, psi_im, pi_re, pi_im over the
// interior (radial index outer, theta inner).
void write_snapshot_csv(const std::string& path, const Grid& g,
                        const FieldLayout& lay, const StateVec& u,
                        const WorkReal& tau);
StateVec read_snapshot_csv(const std::string& path, const FieldLayout& lay,
                           WorkReal* tau_out = nullptr);

// Checkpoint: versioned text header (config hash, step, tau) plus the
// interior values, each work-precision number written as its two limbs in
// shortest exact decimal, so restore is bit-identical.
void write_checkpoint(const std::string& path, const RunConfig& c, long step,
                      const WorkReal& tau, const FieldLayout& lay,
                      const StateVec& u);

struct Checkpoint {
  uint64_t hash = 0;
  long step = 0;
  WorkReal tau{0.0};
  StateVec state;
};

Checkpoint read_checkpoint(const std::string& path, const RunConfig& expect,
                           const FieldLayout& lay);

}  // namespace hweno
