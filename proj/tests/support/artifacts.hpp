#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hweno/driver.hpp"
#include "hweno/io.hpp"

// Locating (or regenerating) production-run artifacts for the acceptance
// tests.  A run directory is reusable when its meta.csv carries the config
// hash of the embedded spec and the run finished (or blew up, where that is
// the expected outcome).  Anything else triggers a fresh in-process run, so
// the tests pass on a clean tree at the cost of the full evolution time.
namespace artifacts {

using hweno::RunConfig;
using hweno::TimeSeries;

inline std::map<std::string, std::string> read_meta(const std::string& path) {
  std::map<std::string, std::string> m;
  std::ifstream in(path);
  if (!in) return m;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    size_t c = line.find(',');
    if (c == std::string::npos) continue;
    m[line.substr(0, c)] = line.substr(c + 1);
  }
  return m;
}

struct RunData {
  RunConfig cfg;
  std::string dir;
  std::map<std::string, std::string> meta;
  std::vector<TimeSeries> timeseries;
  std::vector<TimeSeries> observables;

  const TimeSeries& series(const std::string& label) const {
    for (const auto& s : timeseries)
      if (s.label == label) return s;
    for (const auto& s : observables)
      if (s.label == label) return s;
    throw std::runtime_error(dir + ": no series labeled '" + label + "'");
  }
  double meta_num(const std::string& key) const {
    auto it = meta.find(key);
    if (it == meta.end())
      throw std::runtime_error(dir + "/meta.csv: missing key " + key);
    return std::stod(it->second);
  }
};

inline RunData ensure_run(const char* spec_text, const std::string& name,
                          bool expect_blowup = false) {
  RunConfig cfg = hweno::parse_config_text(spec_text, name);
  const std::string dir = cfg.output.directory;
  char want[20];
  std::snprintf(want, sizeof(want), "%016llx",
                static_cast<unsigned long long>(hweno::config_hash(cfg)));

  auto meta = read_meta(dir + "/meta.csv");
  bool reuse = false;
  auto it = meta.find("config_hash");
  if (it != meta.end() && it->second == want) {
    if (meta["blew_up"] == "1")
      reuse = expect_blowup;
    else
      reuse = !meta["steps"].empty() && meta["steps"] == meta["planned_steps"];
  }
  if (!reuse) {
    std::printf("# %s: no reusable artifacts in %s, running now (config %s)\n",
                name.c_str(), dir.c_str(), want);
    std::fflush(stdout);
    hweno::execute_run(cfg, dir);
    meta = read_meta(dir + "/meta.csv");
  }

  RunData d;
  d.cfg = cfg;
  d.dir = dir;
  d.meta = std::move(meta);
  d.timeseries = hweno::read_series_csv(dir + "/timeseries.csv");
  d.observables = hweno::read_series_csv(dir + "/observables.csv");
  return d;
}

// Window average of |p(tau) + shift| over [t0, t1] for a real-valued series
// stored in re (gaps already omitted).
inline double window_mean_abs_shift(const TimeSeries& s, double shift,
                                    double t0, double t1) {
  double acc = 0.0;
  long n = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    double t = hweno::to_double(s.tau[i]);
    if (t < t0 || t > t1) continue;
    acc += std::fabs(hweno::to_double(s.re[i]) + shift);
    ++n;
  }
  if (n == 0) throw std::runtime_error("window_mean_abs_shift: empty window");
  return acc / double(n);
}

}  // namespace artifacts
