#include "hweno/geometry.hpp"

#include <cmath>
#include <string>

#include "hweno/coeff_kernels.hpp"

namespace hweno {

void PhysicalParams::validate() const {
  if (!(M.hi > 0.0)) throw std::invalid_argument("mass must be positive");
  if (a < WorkReal(0) || a > M)
    throw std::invalid_argument("spin must satisfy 0 <= a <= M");
  if (spin < -2 || spin > 2)
    throw std::invalid_argument("spin weight must be in {-2..2}");
  if (S <= horizon_radius(*this))
    throw std::invalid_argument("compactification scale must exceed r+");
}

WorkReal horizon_radius(const PhysicalParams& p) {
  return p.M + sqrt(p.M * p.M - p.a * p.a);
}

WorkReal horizon_rho(const PhysicalParams& p) {
  return compactify(horizon_radius(p), p.S);
}

WorkReal compactify(const WorkReal& r, const WorkReal& S) {
  if (r.hi < 0.0) throw std::domain_error("compactify: r < 0");
  if (std::isinf(r.hi)) return S;
  return r / (WorkReal(1) + r / S);
}

WorkReal decompactify(const WorkReal& rho, const WorkReal& S) {
  if (rho.hi < 0.0 || rho >= S)
    throw std::domain_error("decompactify: rho outside [0, S)");
  return rho / (WorkReal(1) - rho / S);
}

WorkReal tortoise(const WorkReal& r, const PhysicalParams& p) {
  const WorkReal &M = p.M, &a = p.a;
  WorkReal root = sqrt(M * M - a * a);
  WorkReal two_m = WorkReal(2) * M;
  if (root.hi == 0.0) {
    // extremal: r* = r + 2M ln|(r-M)/(2M)| - 2M^2/(r-M)
    WorkReal d = r - M;
    if (d.hi == 0.0) throw std::domain_error("tortoise: r = M at extremality");
    return r + two_m * log(abs(d) / two_m) - two_m * M / d;
  }
  WorkReal rp = M + root, rm = M - root;
  WorkReal dp = r - rp, dm = r - rm;
  if (dp.hi == 0.0 || dm.hi == 0.0)
    throw std::domain_error("tortoise: Delta = 0");
  // r* = r + [2M r+ ln|(r-r+)/(2M)| - 2M r- ln|(r-r-)/(2M)|] / (r+ - r-)
  return r + (two_m * rp * log(abs(dp) / two_m) -
              two_m * rm * log(abs(dm) / two_m)) / (rp - rm);
}

WorkReal height(const WorkReal& r, const WorkReal& S) {
  return r * r / (r + S) - WorkReal(4) * log(S / (r + S));
}

WorkReal height_prime(const WorkReal& r, const WorkReal& S) {
  WorkReal rs = r + S;
  return (r * r + WorkReal(2) * r * S) / (rs * rs) + WorkReal(4) / rs;
}

Grid make_grid(int nrho, int ntheta, const PhysicalParams& p) {
  return make_grid(nrho, ntheta, p,
                   horizon_rho(p) - WorkReal(1) / WorkReal(20));
}

Grid make_grid(int nrho, int ntheta, const PhysicalParams& p,
               const WorkReal& rho_min) {
  p.validate();
  if (nrho < 8 || ntheta < 2)
    throw std::invalid_argument("grid too small for stencil support");
  Grid g;
  g.nrho = nrho;
  g.ntheta = ntheta;
  WorkReal rho_p = horizon_rho(p);
  g.rho_min = rho_min;
  if (g.rho_min.hi <= 0.0)
    throw std::invalid_argument("excision margin exits the chart");
  if (!(g.rho_min < rho_p))
    throw std::invalid_argument("inner boundary must sit inside the horizon");
  g.drho = (p.S - g.rho_min) / WorkReal(nrho - 1);
  g.rho.resize(nrho);
  g.r.resize(nrho);
  g.rstar.resize(nrho);
  for (int j = 0; j < nrho; ++j)
    g.rho[j] = g.rho_min + g.drho * WorkReal(j);
  g.rho[nrho - 1] = p.S;  // exact scri point
  for (int j = 0; j < nrho; ++j) {
    if (j == nrho - 1) {
      g.r[j] = WorkReal(HUGE_VAL);
      g.rstar[j] = WorkReal(HUGE_VAL);
    } else {
      g.r[j] = decompactify(g.rho[j], p.S);
      g.rstar[j] = tortoise(g.r[j], p);
    }
  }
  g.horizon_index = 0;
  for (int j = 1; j < nrho; ++j)
    if (abs(g.rho[j] - rho_p) < abs(g.rho[g.horizon_index] - rho_p))
      g.horizon_index = j;
  g.dtheta = dd_pi / WorkReal(ntheta);
  g.theta.resize(ntheta);
  g.costh.resize(ntheta);
  g.sinth.resize(ntheta);
  for (int k = 0; k < ntheta; ++k) {
    g.theta[k] = g.dtheta * (WorkReal(k) + WorkReal(0.5));
    sin_cos(g.theta[k], g.sinth[k], g.costh[k]);
  }
  return g;
}

CoefficientSet assemble_coefficients(const Grid& g, const PhysicalParams& p) {
  CoefficientSet c;
  c.nrho = g.nrho;
  c.ntheta = g.ntheta;
  size_t n = size_t(g.nrho) * g.ntheta;
  for (auto* v : {&c.b, &c.lam, &c.w_re, &c.w_im, &c.bt_re, &c.bt_im,
                  &c.c_re, &c.c_im, &c.ath, &c.p_mix, &c.r_rad,
                  &c.br_re, &c.br_im, &c.bprime})
    v->resize(n);
  c.cotth.resize(g.ntheta);
  for (int k = 0; k < g.ntheta; ++k)
    c.cotth[k] = g.costh[k] / g.sinth[k];
  WorkReal vmax(0);
  for (int k = 0; k < g.ntheta; ++k) {
    for (int j = 0; j < g.nrho; ++j) {
      auto w = wave_op_coeffs<WorkReal>(g.rho[j], g.costh[k], p.M, p.a, p.S,
                                        p.spin, p.mmode);
      size_t i = c.index(j, k);
      WorkReal P = w.a_tr, R = w.a_rr;
      WorkReal disc2 = P * P + WorkReal(4) * R;
      if (disc2.hi < 0.0)
        throw std::runtime_error("hyperbolicity violated at rho=" +
                                 std::to_string(g.rho[j].hi) + " theta=" +
                                 std::to_string(g.theta[k].hi));
      WorkReal disc = sqrt(disc2);
      WorkReal b = -(P + disc) / WorkReal(2);
      WorkReal lam = b + disc;
      // db/drho = -(P' + (P P' + 2 R')/disc)/2
      WorkReal bp = -(w.da_tr + (P * w.da_tr + WorkReal(2) * w.da_rr) / disc)
                    / WorkReal(2);
      c.b[i] = b;
      c.lam[i] = lam;
      c.bprime[i] = bp;
      c.p_mix[i] = P;
      c.r_rad[i] = R;
      c.bt_re[i] = w.bt_re;
      c.bt_im[i] = w.bt_im;
      c.br_re[i] = w.br_re;
      c.br_im[i] = w.br_im;
      c.c_re[i] = w.c_re;
      c.c_im[i] = w.c_im;
      c.ath[i] = w.a_th;
      c.w_re[i] = lam * bp + w.br_re - w.bt_re * b;
      c.w_im[i] = w.br_im - w.bt_im * b;
      WorkReal sp = max(abs(b), abs(lam));
      if (vmax < sp) vmax = sp;
    }
  }
  c.max_speed = vmax;
  return c;
}

}  // namespace hweno
