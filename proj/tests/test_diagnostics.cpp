#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "hweno/diagnostics.hpp"

using namespace hweno;

namespace {

PhysicalParams extremal_params() {
  PhysicalParams p;
  p.M = WorkReal(1);
  p.a = WorkReal(1);
  p.spin = -2;
  p.mmode = 0;
  p.S = WorkReal(20);
  return p;
}

PhysicalParams schw_params() {
  PhysicalParams p;
  p.M = WorkReal(1);
  p.a = WorkReal(0);
  p.spin = 0;
  p.mmode = 0;
  p.S = WorkReal(20);
  return p;
}

double rel_err(const WorkReal& got, const WorkReal& want) {
  double scale = std::fabs(to_double(want));
  if (scale < 1e-300) scale = 1.0;
  return std::fabs(to_double(got - want)) / scale;
}

double cx_rel_err(const CxW& got, const CxW& want) {
  double scale = to_double(cx_abs(want));
  if (scale < 1e-300) scale = 1.0;
  return to_double(cx_abs(got - want)) / scale;
}

}  // namespace

TEST_CASE("field conversions match their closed forms and invert") {
  PhysicalParams schw = schw_params();
  PhysicalParams ext = extremal_params();

  // a=0, r=4: Delta = 8, conversion factor r/Delta^2 = 1/16 exactly.
  CxW psi{WorkReal(1), WorkReal(-2)};
  CxW phi = psi_to_phi(psi, WorkReal(4), schw);
  CHECK(phi.re == WorkReal(1) / WorkReal(16));
  CHECK(phi.im == WorkReal(-2) / WorkReal(16));

  // Extremal horizon r=1: Delta = 0, the conversion must refuse.
  CHECK_THROWS_AS(psi_to_phi(psi, WorkReal(1), ext), std::domain_error);
  CHECK_THROWS_AS(psi_to_phi(psi, WorkReal(HUGE_VAL), schw),
                  std::domain_error);

  // a=0: the psi4hh factor reduces to 4/r; at r=2 that doubles Phi.
  CxW f{WorkReal(3), WorkReal(5)};
  CxW hh = psi4hh_from_phi(f, WorkReal(2), WorkReal(0.3), schw);
  CHECK(cx_rel_err(hh, {WorkReal(6), WorkReal(10)}) < 1e-30);

  // On the equator the factor is real: 4 (r^2+a^2)^2 / r^5.
  CxW eq = psi4hh_from_phi({WorkReal(1), WorkReal(0)}, WorkReal(3),
                           WorkReal(0), ext);
  WorkReal want = WorkReal(4) * WorkReal(100) / WorkReal(243);
  CHECK(rel_err(eq.re, want) < 1e-30);
  CHECK(std::fabs(to_double(eq.im)) < 1e-32);

  // Round trips are exact inverse pairs to work precision.
  CxW probe{WorkReal(0.7), WorkReal(-1.9)};
  CxW back = phi_from_psi4hh(
      psi4hh_from_phi(probe, WorkReal(3), WorkReal(0.7), ext), WorkReal(3),
      WorkReal(0.7), ext);
  CHECK(cx_rel_err(back, probe) < 1e-28);

  // psi4k vanishes on the extremal horizon and agrees with the type-III
  // rescaling of psi4hh off it.
  CxW k0 = psi4k_from_phi(probe, WorkReal(1), WorkReal(0.2), ext);
  CHECK(to_double(cx_abs(k0)) == 0.0);
  WorkReal r{2.5};
  WorkReal d = kerr_delta(r, ext);
  WorkReal s = r * r + ext.a * ext.a;
  CxW viahh = psi4hh_from_phi(probe, r, WorkReal(0.4), ext);
  viahh.re = viahh.re * d * d / (WorkReal(4) * s * s);
  viahh.im = viahh.im * d * d / (WorkReal(4) * s * s);
  CxW direct = psi4k_from_phi(probe, r, WorkReal(0.4), ext);
  CHECK(cx_rel_err(direct, viahh) < 1e-28);

  // Identity-mode read returns the stored value bit for bit.
  FieldLayout lay{8, 2};
  StateVec u(lay.size(), WorkReal(0));
  u[lay.at(0, 3, 1)] = WorkReal(1.25);
  u[lay.at(1, 3, 1)] = WorkReal(-0.5);
  CxW got = state_sample(u, lay, 3, 1);
  CHECK(got.re.hi == 1.25);
  CHECK(got.im.hi == -0.5);
}

TEST_CASE("one-sided stencil weights hit the classic tables and offsets") {
  // Width-6 first derivative at the left node.
  std::vector<WorkReal> c = one_sided_coeffs(6, 1, WorkReal(0));
  const double num[6] = {-137.0, 300.0, -300.0, 200.0, -75.0, 12.0};
  for (int i = 0; i < 6; ++i)
    CHECK(rel_err(c[i], WorkReal(num[i]) / WorkReal(60)) < 1e-30);

  // Width-5 interpolation at a node is the delta stencil.
  std::vector<WorkReal> c0 = one_sided_coeffs(5, 0, WorkReal(2));
  for (int i = 0; i < 5; ++i)
    CHECK(std::fabs(to_double(c0[i]) - (i == 2 ? 1.0 : 0.0)) < 1e-30);

  // Derivatives of a full-degree polynomial at a fractional offset are
  // reproduced exactly (the system is square).
  const double pc[8] = {0.7, -1.3, 0.41, 2.2, -0.9, 0.05, 1.7, -0.23};
  WorkReal x0{0.37};
  const int cases[4][2] = {{5, 0}, {6, 1}, {7, 2}, {8, 3}};
  for (auto& cs : cases) {
    int npts = cs[0], d = cs[1];
    std::vector<WorkReal> w = one_sided_coeffs(npts, d, x0);
    WorkReal acc(0);
    for (int i = 0; i < npts; ++i) {
      WorkReal xi(i), v(0);
      for (int t = npts - 1; t >= 0; --t) v = v * xi + WorkReal(pc[t]);
      acc = acc + w[i] * v;
    }
    // analytic d-th derivative at x0
    WorkReal want(0);
    for (int t = npts - 1; t >= d; --t) {
      WorkReal fall(1);
      for (int q = 0; q < d; ++q) fall = fall * WorkReal(t - q);
      want = want * x0 + fall * WorkReal(pc[t]);
    }
    CHECK(rel_err(acc, want) < 1e-26);
  }

  CHECK_THROWS_AS(one_sided_coeffs(1, 0, WorkReal(0)), std::invalid_argument);
  CHECK_THROWS_AS(one_sided_coeffs(6, 6, WorkReal(0)), std::invalid_argument);
}

TEST_CASE("horizon sampler evaluates exactly at rho_+") {
  PhysicalParams p = extremal_params();
  Grid g = make_grid(256, 4, p);
  FieldLayout lay{g.nrho, g.ntheta};
  WorkReal rp = horizon_rho(p);

  // Cubic in (rho - rho_+), theta-independent: widths 5..8 are all exact.
  const double a0 = 0.75, a1 = -1.4, a2 = 2.3, a3 = 0.6;
  const double b0 = -0.2, b1 = 0.9, b2 = -1.1, b3 = 1.8;
  StateVec u(lay.size(), WorkReal(0));
  for (int k = 0; k < g.ntheta; ++k)
    for (int j = 0; j < g.nrho; ++j) {
      WorkReal d = g.rho[j] - rp;
      u[lay.at(0, j, k)] =
          WorkReal(a0) + d * (WorkReal(a1) + d * (WorkReal(a2) + d * WorkReal(a3)));
      u[lay.at(1, j, k)] =
          WorkReal(b0) + d * (WorkReal(b1) + d * (WorkReal(b2) + d * WorkReal(b3)));
    }

  HorizonSampler hs(g, p, lay, 1);
  HorizonObservables ob = hs.sample(u);
  CHECK(rel_err(ob.phi.re, WorkReal(a0)) < 1e-24);
  CHECK(rel_err(ob.phi.im, WorkReal(b0)) < 1e-24);
  CHECK(rel_err(ob.dphi[0].re, WorkReal(a1)) < 1e-22);
  CHECK(rel_err(ob.dphi[0].im, WorkReal(b1)) < 1e-22);
  CHECK(rel_err(ob.dphi[1].re, WorkReal(2) * WorkReal(a2)) < 1e-20);
  CHECK(rel_err(ob.dphi[1].im, WorkReal(2) * WorkReal(b2)) < 1e-20);
  CHECK(rel_err(ob.dphi[2].re, WorkReal(6) * WorkReal(a3)) < 1e-18);
  CHECK(rel_err(ob.dphi[2].im, WorkReal(6) * WorkReal(b3)) < 1e-18);

  // Pure linear field: charge exactly 1; pure quadratic: exactly 0, the
  // offset stencil really is centered on rho_+ and not on a gridpoint.
  StateVec ulin(lay.size(), WorkReal(0));
  StateVec uquad(lay.size(), WorkReal(0));
  for (int k = 0; k < g.ntheta; ++k)
    for (int j = 0; j < g.nrho; ++j) {
      WorkReal d = g.rho[j] - rp;
      ulin[lay.at(0, j, k)] = d;
      uquad[lay.at(0, j, k)] = d * d;
    }
  CxW qlin = aretakis_charge(ulin, lay, g, p, 2);
  CxW qquad = aretakis_charge(uquad, lay, g, p, 2);
  CHECK(std::fabs(to_double(qlin.re) - 1.0) < 1e-24);
  CHECK(std::fabs(to_double(qlin.im)) < 1e-24);
  CHECK(std::fabs(to_double(qquad.re)) < 1e-23);

  // The convenience wrapper matches the persistent sampler bit for bit.
  HorizonSampler hs2(g, p, lay, 2);
  CxW via = hs2.sample(ulin).dphi[0];
  CHECK(via.re.hi == qlin.re.hi);
  CHECK(via.re.lo == qlin.re.lo);

  CHECK_THROWS_AS(HorizonSampler(g, p, lay, 7), std::invalid_argument);
}

TEST_CASE("power-law series recover their indices with masking") {
  // tau^-1 with dense smooth sampling: p = -1 to differencing error.
  TimeSeries s1;
  for (double t = 100.0; t <= 300.0; t += 0.5)
    s1.push(WorkReal(t), WorkReal(3.0) / WorkReal(t), WorkReal(0));
  TimeSeries p1 = local_power_index(s1);
  REQUIRE(p1.size() == s1.size() - 4);
  for (size_t i = 0; i < p1.size(); ++i)
    CHECK(std::fabs(to_double(p1.re[i]) + 1.0) < 1e-8);

  // Constant series: p identically zero.
  TimeSeries sc;
  for (double t = 1.0; t <= 50.0; t += 1.0)
    sc.push(WorkReal(t), WorkReal(2.5), WorkReal(-1.5));
  TimeSeries pc = local_power_index(sc);
  for (size_t i = 0; i < pc.size(); ++i)
    CHECK(std::fabs(to_double(pc.re[i])) < 1e-28);

  // tau^-3 with a fixed complex phase.
  TimeSeries s3;
  for (double t = 100.0; t <= 300.0; t += 0.5) {
    WorkReal amp = WorkReal(7.0) / (WorkReal(t) * WorkReal(t) * WorkReal(t));
    s3.push(WorkReal(t), amp * WorkReal(0.6), amp * WorkReal(-0.8));
  }
  TimeSeries p3 = local_power_index(s3);
  for (size_t i = 0; i < p3.size(); ++i)
    CHECK(std::fabs(to_double(p3.re[i]) + 3.0) < 1e-7);

  // A window pushed below 1e-25 of peak is masked out as a gap.
  TimeSeries sm;
  for (double t = 1.0; t <= 100.0; t += 1.0) {
    double v = (t >= 40.0 && t <= 45.0) ? 1e-30 : 1.0;
    sm.push(WorkReal(t), WorkReal(v), WorkReal(0));
  }
  TimeSeries pm = local_power_index(sm);
  CHECK(pm.size() < sm.size() - 4);
  for (size_t i = 0; i < pm.size(); ++i) {
    double t = to_double(pm.tau[i]);
    CHECK(!(t >= 38.0 && t <= 47.0));
    CHECK(std::isfinite(to_double(pm.re[i])));
  }

  // Two-power sanity: c1 tau^-1 + c2 tau^-3 settles into -1 +- 0.05 by
  // tau = 10 sqrt(c2/c1) and stays there.
  const double c1 = 1.0, c2 = 1e4;
  TimeSeries mix;
  for (double t = 500.0; t <= 2200.0; t += 2.0) {
    WorkReal tw(t);
    mix.push(tw, WorkReal(c1) / tw + WorkReal(c2) / (tw * tw * tw),
             WorkReal(0));
  }
  TimeSeries pmix = local_power_index(mix);
  double settle = 10.0 * std::sqrt(c2 / c1);
  for (size_t i = 0; i < pmix.size(); ++i)
    if (to_double(pmix.tau[i]) >= settle)
      CHECK(std::fabs(to_double(pmix.re[i]) + 1.0) <= 0.05);

  // Windowed statistics on a short dyadic-valued series (binary exact).
  TimeSeries w;
  w.push(WorkReal(1), WorkReal(1.0), WorkReal(0));
  w.push(WorkReal(2), WorkReal(-1.25), WorkReal(0));
  w.push(WorkReal(3), WorkReal(0.75), WorkReal(0));
  w.push(WorkReal(10), WorkReal(44.0), WorkReal(0));
  WindowStats ws = window_stats(w, 0.5, 3.5);
  CHECK(ws.count == 3);
  CHECK(rel_err(ws.mean, WorkReal(1.0)) < 1e-30);
  CHECK(rel_err(ws.min, WorkReal(0.75)) < 1e-30);
  CHECK(rel_err(ws.max, WorkReal(1.25)) < 1e-30);
  CHECK(rel_err(window_rel_drift(w, 0.5, 3.5), WorkReal(0.5)) < 1e-28);
  CHECK(std::fabs(to_double(window_mean_re(w, 0.5, 3.5)) - 0.5 / 3.0) <
        1e-15);
}

TEST_CASE("multipole projection is orthonormal, linear, and accurate") {
  // Exact-evaluation path: the implemented quadrature is orthonormal.
  for (int lp = 2; lp <= 5; ++lp) {
    WorkReal c = multipole_project_fn(
        [&](const WorkReal& th) { return spin_ylm_theta(-2, 2, 0, th); }, -2,
        0, lp, 24);
    if (lp == 2)
      CHECK(std::fabs(to_double(c) - 1.0) < 1e-12);
    else
      CHECK(std::fabs(to_double(c)) < 1e-10);
  }

  // Zero field projects to zero.
  std::vector<WorkReal> zero(32, WorkReal(0));
  CHECK(to_double(multipole_project(zero, -2, 0, 2)) == 0.0);

  // Staggered-grid path at Ntheta = 32 and 64: coefficient of the sampled
  // basis function converges at the interpolation order.
  auto sampled_coeff = [&](int nt, int ell_field, int ell_probe) {
    WorkReal dth = dd_pi / WorkReal(nt);
    std::vector<WorkReal> slice(nt);
    for (int k = 0; k < nt; ++k) {
      WorkReal th = (WorkReal(k) + WorkReal(0.5)) * dth;
      slice[k] = spin_ylm_theta(-2, ell_field, 0, th);
    }
    return multipole_project(slice, -2, 0, ell_probe);
  };
  double e32 = std::fabs(to_double(sampled_coeff(32, 2, 2)) - 1.0);
  double e64 = std::fabs(to_double(sampled_coeff(64, 2, 2)) - 1.0);
  CHECK(e32 < 1e-4);
  CHECK(e64 < 1e-5);
  CHECK(std::fabs(to_double(sampled_coeff(32, 2, 4))) < 1e-4);

  // Linear combination 3 * (ell=2) + 2 * (ell=4) is recovered.
  {
    int nt = 32;
    WorkReal dth = dd_pi / WorkReal(nt);
    std::vector<WorkReal> slice(nt);
    for (int k = 0; k < nt; ++k) {
      WorkReal th = (WorkReal(k) + WorkReal(0.5)) * dth;
      slice[k] = WorkReal(3) * spin_ylm_theta(-2, 2, 0, th) +
                 WorkReal(2) * spin_ylm_theta(-2, 4, 0, th);
    }
    CHECK(std::fabs(to_double(multipole_project(slice, -2, 0, 2)) - 3.0) <
          1e-3);
    CHECK(std::fabs(to_double(multipole_project(slice, -2, 0, 4)) - 2.0) <
          1e-3);
  }

  // Scalar parity path: sampled Y20 against the scalar basis.
  {
    int nt = 32;
    WorkReal dth = dd_pi / WorkReal(nt);
    std::vector<WorkReal> slice(nt);
    for (int k = 0; k < nt; ++k) {
      WorkReal th = (WorkReal(k) + WorkReal(0.5)) * dth;
      slice[k] = spin_ylm_theta(0, 2, 0, th);
    }
    CHECK(std::fabs(to_double(multipole_project(slice, 0, 0, 2)) - 1.0) <
          1e-4);
    CHECK(std::fabs(to_double(multipole_project(slice, 0, 0, 0))) < 1e-4);
  }

  CHECK_THROWS_AS(multipole_project(zero, -2, 0, 1), std::domain_error);
  CHECK_THROWS_AS(multipole_project(zero, -2, 1, 2), std::invalid_argument);

  // theta_slice pulls the interior row.
  FieldLayout lay{6, 4};
  StateVec u(lay.size(), WorkReal(0));
  for (int k = 0; k < 4; ++k) u[lay.at(2, 3, k)] = WorkReal(k + 1);
  std::vector<WorkReal> row = theta_slice(u, lay, 2, 3);
  REQUIRE(row.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(to_double(row[k]) == k + 1.0);
}
