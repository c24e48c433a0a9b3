#include "hweno/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hweno {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& where) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw std::runtime_error(where + ": bad real value '" + text + "'");
  return v;
}

long parse_long(const std::string& text, const std::string& where) {
  char* end = nullptr;
  long v = std::strtol(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0')
    throw std::runtime_error(where + ": bad integer value '" + text + "'");
  return v;
}

WorkReal parse_work(const std::string& text, const std::string& where) {
  bool ok = false;
  WorkReal v = dd_parse(text, &ok);
  if (!ok) throw std::runtime_error(where + ": bad real value '" + text + "'");
  return v;
}

// shortest decimal that re-reads to the identical double
std::string limb_text(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double limb_parse(std::string_view s, const std::string& where) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::runtime_error(where + ": bad limb '" + std::string(s) + "'");
  return v;
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::weno5: return "weno5";
    case Scheme::weno3: return "weno3";
    case Scheme::fd6ko: return "fd6ko";
  }
  return "?";
}

std::string mode_name(PrecisionMode m) {
  return m == PrecisionMode::full ? "full" : "mixed";
}

std::string stepper_name(StepperSpec::Kind k) {
  return k == StepperSpec::ssprk33 ? "ssprk33" : "ssprk104";
}

std::string dtoa(double v) { return limb_text(v); }

// the evolution-defining subset; continuation and plumbing keys excluded
void render_core(const RunConfig& c, std::ostringstream& o) {
  o << "[physics]\n";
  o << "M = " << c.lit.at("physics.M") << "\n";
  o << "a = " << c.lit.at("physics.a") << "\n";
  o << "s = " << c.phys.spin << "\n";
  o << "m = " << c.phys.mmode << "\n";
  o << "S = " << c.lit.at("physics.S") << "\n";
  o << "ell = " << c.init.ell << "\n";
  o << "center = " << c.lit.at("physics.center") << "\n";
  o << "width = " << c.lit.at("physics.width") << "\n";
  o << "amplitude = " << c.lit.at("physics.amplitude") << "\n";
  o << "\n[grid]\n";
  o << "nrho = " << c.nrho << "\n";
  o << "ntheta = " << c.ntheta << "\n";
  o << "\n[scheme]\n";
  o << "scheme = " << scheme_name(c.scheme.scheme) << "\n";
  o << "precision = " << mode_name(c.scheme.mode) << "\n";
  o << "epsilon = " << c.lit.at("scheme.epsilon") << "\n";
  o << "sigma = " << c.lit.at("scheme.sigma") << "\n";
  o << "\n[time]\n";
  o << "stepper = " << stepper_name(c.stepper.kind) << "\n";
  o << "cfl = " << c.lit.at("time.cfl") << "\n";
}

}  // namespace

void set_real(RunConfig& c, const std::string& key, const std::string& text) {
  WorkReal v = parse_work(text, key);
  if (key == "physics.M") c.phys.M = v;
  else if (key == "physics.a") c.phys.a = v;
  else if (key == "physics.S") c.phys.S = v;
  else if (key == "physics.center") c.init.center = v;
  else if (key == "physics.width") c.init.width = v;
  else if (key == "physics.amplitude") c.init.amplitude = v;
  else if (key == "scheme.epsilon") c.scheme.eps = v;
  else if (key == "scheme.sigma") c.scheme.sigma = v;
  else if (key == "time.cfl") c.stepper.cfl = v;
  else if (key == "output.observer_rho") c.output.observer_rho = v;
  else throw std::invalid_argument("set_real: unknown key " + key);
  c.lit[key] = trim(text);
}

RunConfig default_config() {
  RunConfig c;
  c.phys.spin = -2;
  c.phys.mmode = 0;
  set_real(c, "physics.M", "1");
  set_real(c, "physics.a", "1");
  set_real(c, "physics.S", "20");
  set_real(c, "physics.center", "1.0");
  set_real(c, "physics.width", "0.22");
  set_real(c, "physics.amplitude", "1");
  set_real(c, "scheme.epsilon", "1e-6");
  set_real(c, "scheme.sigma", "0.01");
  set_real(c, "time.cfl", "0.5");
  set_real(c, "output.observer_rho", "10");
  return c;
}

void RunConfig::validate() const {
  phys.validate();
  if (nrho < 2 * kRadialGhost + 1)
    throw std::invalid_argument(
        "grid.nrho below stencil support (need at least 9)");
  if (ntheta < 2)
    throw std::invalid_argument("grid.ntheta must be at least 2");
  if (!(to_double(scheme.eps) > 0.0))
    throw std::invalid_argument("scheme.epsilon must be positive");
  if (to_double(scheme.sigma) < 0.0)
    throw std::invalid_argument("scheme.sigma must be non-negative");
  if (!(to_double(stepper.cfl) > 0.0) || to_double(stepper.cfl) > 1.0)
    throw std::invalid_argument("time.cfl must lie in (0, 1]");
  if (!(tau_end > 0.0))
    throw std::invalid_argument("time.tau_end must be positive");
  if (!(window_t0 < window_t1))
    throw std::invalid_argument(
        "time.window_start must precede time.window_end");
  if (init.ell < std::abs(phys.spin) || init.ell < std::abs(phys.mmode))
    throw std::invalid_argument("physics.ell must reach max(|s|, |m|)");
  if (!(to_double(init.width) > 0.0))
    throw std::invalid_argument("physics.width must be positive");
  if (!(to_double(init.center) > 0.0) || !(init.center < phys.S))
    throw std::invalid_argument("physics.center must lie inside (0, S)");
  if (!(output.series_cadence > 0.0))
    throw std::invalid_argument("output.series_cadence must be positive");
  if (output.snapshot_cadence < 0.0 || output.checkpoint_cadence < 0.0)
    throw std::invalid_argument("output cadences must be non-negative");
  if (!(to_double(output.observer_rho) > 0.0) ||
      !(output.observer_rho < phys.S))
    throw std::invalid_argument(
        "output.observer_rho must lie inside (0, S)");
  if (workers < 1)
    throw std::invalid_argument("parallel.workers must be at least 1");
}

RunConfig parse_config_text(const std::string& text,
                            const std::string& origin) {
  RunConfig c = default_config();
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = origin + ":" + std::to_string(lineno);
    size_t cut = line.find_first_of("#;");
    if (cut != std::string::npos) line = line.substr(0, cut);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::runtime_error(where + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "physics" && section != "grid" && section != "scheme" &&
          section != "time" && section != "output" && section != "parallel")
        throw std::runtime_error(where + ": unknown section [" + section +
                                 "]");
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(where + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (section.empty())
      throw std::runtime_error(where + ": key before any [section]");
    std::string full = section + "." + key;
    if (full == "physics.M" || full == "physics.a" || full == "physics.S" ||
        full == "physics.center" || full == "physics.width" ||
        full == "physics.amplitude" || full == "scheme.epsilon" ||
        full == "scheme.sigma" || full == "time.cfl" ||
        full == "output.observer_rho") {
      try {
        set_real(c, full, val);
      } catch (const std::runtime_error& e) {
        throw std::runtime_error(where + ": " + e.what());
      }
    } else if (full == "physics.s") {
      c.phys.spin = static_cast<int>(parse_long(val, where));
    } else if (full == "physics.m") {
      c.phys.mmode = static_cast<int>(parse_long(val, where));
    } else if (full == "physics.ell") {
      c.init.ell = static_cast<int>(parse_long(val, where));
    } else if (full == "grid.nrho") {
      c.nrho = static_cast<int>(parse_long(val, where));
    } else if (full == "grid.ntheta") {
      c.ntheta = static_cast<int>(parse_long(val, where));
    } else if (full == "scheme.scheme") {
      if (val == "weno5") c.scheme.scheme = Scheme::weno5;
      else if (val == "weno3") c.scheme.scheme = Scheme::weno3;
      else if (val == "fd6ko") c.scheme.scheme = Scheme::fd6ko;
      else
        throw std::runtime_error(where + ": unknown scheme '" + val + "'");
    } else if (full == "scheme.precision") {
      if (val == "full") c.scheme.mode = PrecisionMode::full;
      else if (val == "mixed") c.scheme.mode = PrecisionMode::mixed;
      else
        throw std::runtime_error(where + ": unknown precision '" + val + "'");
    } else if (full == "time.stepper") {
      if (val == "ssprk33") c.stepper.kind = StepperSpec::ssprk33;
      else if (val == "ssprk104") c.stepper.kind = StepperSpec::ssprk104;
      else
        throw std::runtime_error(where + ": unknown stepper '" + val + "'");
    } else if (full == "time.tau_end") {
      c.tau_end = parse_double(val, where);
    } else if (full == "time.window_start") {
      c.window_t0 = parse_double(val, where);
    } else if (full == "time.window_end") {
      c.window_t1 = parse_double(val, where);
    } else if (full == "output.directory") {
      c.output.directory = val;
    } else if (full == "output.series_cadence") {
      c.output.series_cadence = parse_double(val, where);
    } else if (full == "output.snapshot_cadence") {
      c.output.snapshot_cadence = parse_double(val, where);
    } else if (full == "output.checkpoint_cadence") {
      c.output.checkpoint_cadence = parse_double(val, where);
    } else if (full == "parallel.workers") {
      c.workers = static_cast<int>(parse_long(val, where));
    } else {
      throw std::runtime_error(where + ": unknown key '" + full + "'");
    }
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string render_config(const RunConfig& c) {
  std::ostringstream o;
  render_core(c, o);
  o << "tau_end = " << dtoa(c.tau_end) << "\n";
  o << "window_start = " << dtoa(c.window_t0) << "\n";
  o << "window_end = " << dtoa(c.window_t1) << "\n";
  o << "\n[output]\n";
  o << "directory = " << c.output.directory << "\n";
  o << "series_cadence = " << dtoa(c.output.series_cadence) << "\n";
  o << "snapshot_cadence = " << dtoa(c.output.snapshot_cadence) << "\n";
  o << "checkpoint_cadence = " << dtoa(c.output.checkpoint_cadence) << "\n";
  o << "observer_rho = " << c.lit.at("output.observer_rho") << "\n";
  o << "\n[parallel]\n";
  o << "workers = " << c.workers << "\n";
  return o.str();
}

uint64_t config_hash(const RunConfig& c) {
  std::ostringstream o;
  render_core(c, o);
  uint64_t h = 1469598103934665603ull;
  for (char ch : o.str()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

void write_timeseries_csv(const std::string& path, const TimeSeries& phi,
                          const TimeSeries& dphi1, const TimeSeries& dphi2,
                          const TimeSeries& pindex) {
  if (dphi1.size() != phi.size() || dphi2.size() != phi.size())
    throw std::invalid_argument("write_timeseries_csv: length mismatch");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "tau,phi_re,phi_im,dphi1_re,dphi1_im,dphi2_re,dphi2_im,p_index\n";
  size_t ip = 0;
  for (size_t i = 0; i < phi.size(); ++i) {
    out << dd_format(phi.tau[i]) << ',' << dd_format(phi.re[i]) << ','
        << dd_format(phi.im[i]) << ',' << dd_format(dphi1.re[i]) << ','
        << dd_format(dphi1.im[i]) << ',' << dd_format(dphi2.re[i]) << ','
        << dd_format(dphi2.im[i]) << ',';
    while (ip < pindex.size() && pindex.tau[ip] < phi.tau[i]) ++ip;
    if (ip < pindex.size() && pindex.tau[ip] == phi.tau[i])
      out << dd_format(pindex.re[ip]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

void write_series_table(const std::string& path,
                        const std::vector<const TimeSeries*>& cols) {
  if (cols.empty() || cols[0]->size() == 0)
    throw std::invalid_argument("write_series_table: nothing to write");
  const size_t n = cols[0]->size();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "tau";
  for (const TimeSeries* s : cols)
    out << ',' << s->label << "_re," << s->label << "_im";
  out << '\n';
  for (size_t i = 0; i < n; ++i) {
    out << dd_format(cols[0]->tau[i]);
    for (const TimeSeries* s : cols) {
      if (s->size() != n)
        throw std::invalid_argument("write_series_table: length mismatch");
      out << ',' << dd_format(s->re[i]) << ',' << dd_format(s->im[i]);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::vector<TimeSeries> read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(path + ": empty series file");
  std::vector<std::string> head;
  {
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) head.push_back(trim(cell));
  }
  if (head.empty() || head[0] != "tau")
    throw std::runtime_error(path + ": first column must be tau");
  const size_t ncol = head.size();
  // column -> (series index, imaginary?)
  std::vector<TimeSeries> out;
  std::vector<std::pair<int, bool>> target(ncol, {-1, false});
  for (size_t c = 1; c < ncol; ++c) {
    const std::string& h = head[c];
    if (h.size() > 3 && h.substr(h.size() - 3) == "_im") {
      std::string base = h.substr(0, h.size() - 3);
      for (size_t q = 0; q < out.size(); ++q)
        if (out[q].label == base) target[c] = {static_cast<int>(q), true};
      if (target[c].first < 0)
        throw std::runtime_error(path + ": column " + h +
                                 " has no matching _re column");
    } else {
      std::string base = h;
      if (h.size() > 3 && h.substr(h.size() - 3) == "_re")
        base = h.substr(0, h.size() - 3);
      TimeSeries s;
      s.label = base;
      out.push_back(s);
      target[c] = {static_cast<int>(out.size()) - 1, false};
    }
  }
  // gather rows; imaginary cells pair up with the re cell of the same row
  long rowno = 1;
  while (std::getline(in, line)) {
    ++rowno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::istringstream rs(line);
    std::string cell;
    while (std::getline(rs, cell, ',')) cells.push_back(trim(cell));
    cells.resize(ncol);
    std::string where = path + ":" + std::to_string(rowno);
    WorkReal tau = parse_work(cells[0], where);
    std::vector<bool> pushed(out.size(), false);
    for (size_t c = 1; c < ncol; ++c) {
      if (cells[c].empty() || target[c].second) continue;
      TimeSeries& s = out[target[c].first];
      s.push(tau, parse_work(cells[c], where), WorkReal(0));
      pushed[target[c].first] = true;
    }
    for (size_t c = 1; c < ncol; ++c) {
      if (cells[c].empty() || !target[c].second) continue;
      TimeSeries& s = out[target[c].first];
      if (pushed[target[c].first])
        s.im.back() = parse_work(cells[c], where);
    }
  }
  return out;
}

void write_snapshot_csv(const std::string& path, const Grid& g,
                        const FieldLayout& lay, const StateVec& u,
                        const WorkReal& tau) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "tau,rho,theta,psi_re,psi_im,pi_re,pi_im\n";
  std::string tau_s = dd_format(tau);
  for (int j = 0; j < lay.nrho; ++j)
    for (int k = 0; k < lay.ntheta; ++k)
      out << tau_s << ',' << dd_format(g.rho[j]) << ','
          << dd_format(g.theta[k]) << ',' << dd_format(u[lay.at(0, j, k)])
          << ',' << dd_format(u[lay.at(1, j, k)]) << ','
          << dd_format(u[lay.at(2, j, k)]) << ','
          << dd_format(u[lay.at(3, j, k)]) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

StateVec read_snapshot_csv(const std::string& path, const FieldLayout& lay,
                           WorkReal* tau_out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) ||
      trim(line) != "tau,rho,theta,psi_re,psi_im,pi_re,pi_im")
    throw std::runtime_error(path + ": not a snapshot file");
  StateVec u(lay.size(), WorkReal(0));
  long rows = 0, rowno = 1;
  while (std::getline(in, line)) {
    ++rowno;
    if (trim(line).empty()) continue;
    std::string where = path + ":" + std::to_string(rowno);
    std::vector<std::string> cells;
    std::istringstream rs(line);
    std::string cell;
    while (std::getline(rs, cell, ',')) cells.push_back(trim(cell));
    if (cells.size() != 7)
      throw std::runtime_error(where + ": expected 7 columns");
    long idx = rows++;
    int k = static_cast<int>(idx % lay.ntheta);
    int j = static_cast<int>(idx / lay.ntheta);
    if (j >= lay.nrho)
      throw std::runtime_error(path + ": more rows than grid points");
    if (tau_out && idx == 0) *tau_out = parse_work(cells[0], where);
    u[lay.at(0, j, k)] = parse_work(cells[3], where);
    u[lay.at(1, j, k)] = parse_work(cells[4], where);
    u[lay.at(2, j, k)] = parse_work(cells[5], where);
    u[lay.at(3, j, k)] = parse_work(cells[6], where);
  }
  if (rows != static_cast<long>(lay.nrho) * lay.ntheta)
    throw std::runtime_error(path + ": row count does not match the grid");
  return u;
}

void write_checkpoint(const std::string& path, const RunConfig& c, long step,
                      const WorkReal& tau, const FieldLayout& lay,
                      const StateVec& u) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char hx[20];
  std::snprintf(hx, sizeof(hx), "%016llx",
                static_cast<unsigned long long>(config_hash(c)));
  out << "horizon-weno checkpoint 1\n";
  out << "hash " << hx << "\n";
  out << "step " << step << "\n";
  out << "tau " << limb_text(tau.hi) << ' ' << limb_text(tau.lo) << "\n";
  out << "grid " << lay.nrho << ' ' << lay.ntheta << " 4\n";
  out << "data\n";
  for (int comp = 0; comp < kComponents; ++comp)
    for (int k = 0; k < lay.ntheta; ++k)
      for (int j = 0; j < lay.nrho; ++j) {
        const WorkReal& v = u[lay.at(comp, j, k)];
        out << limb_text(v.hi) << ' ' << limb_text(v.lo) << '\n';
      }
  out << "end\n";
  if (!out) throw std::runtime_error("write failed for " + path);
}

Checkpoint read_checkpoint(const std::string& path, const RunConfig& expect,
                           const FieldLayout& lay) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  auto need = [&](const char* what) -> std::string {
    if (!std::getline(in, line))
      throw std::runtime_error(path + ": truncated before " +
                               std::string(what));
    return line;
  };
  if (need("magic") != "horizon-weno checkpoint 1")
    throw std::runtime_error(path + ": not a checkpoint file");
  Checkpoint cp;
  {
    std::istringstream h(need("hash"));
    std::string tag, hex;
    h >> tag >> hex;
    if (tag != "hash" || hex.size() != 16)
      throw std::runtime_error(path + ": malformed hash line");
    cp.hash = std::strtoull(hex.c_str(), nullptr, 16);
  }
  if (cp.hash != config_hash(expect))
    throw std::runtime_error(
        path + ": checkpoint config hash mismatch; refusing to restore");
  {
    std::istringstream h(need("step"));
    std::string tag;
    h >> tag >> cp.step;
    if (tag != "step" || !h)
      throw std::runtime_error(path + ": malformed step line");
  }
  {
    std::istringstream h(need("tau"));
    std::string tag, hi, lo;
    h >> tag >> hi >> lo;
    if (tag != "tau")
      throw std::runtime_error(path + ": malformed tau line");
    cp.tau = WorkReal(limb_parse(hi, path), limb_parse(lo, path));
  }
  {
    std::istringstream h(need("grid"));
    std::string tag;
    int nr = 0, nt = 0, nc = 0;
    h >> tag >> nr >> nt >> nc;
    if (tag != "grid" || nr != lay.nrho || nt != lay.ntheta ||
        nc != kComponents)
      throw std::runtime_error(path +
                               ": checkpoint grid does not match the config");
  }
  if (need("data") != "data")
    throw std::runtime_error(path + ": missing data marker");
  cp.state.assign(lay.size(), WorkReal(0));
  for (int comp = 0; comp < kComponents; ++comp)
    for (int k = 0; k < lay.ntheta; ++k)
      for (int j = 0; j < lay.nrho; ++j) {
        std::istringstream h(need("value"));
        std::string hi, lo;
        h >> hi >> lo;
        cp.state[lay.at(comp, j, k)] =
            WorkReal(limb_parse(hi, path), limb_parse(lo, path));
      }
  if (need("end") != "end")
    throw std::runtime_error(path + ": missing end marker");
  return cp;
}

}  // namespace hweno
