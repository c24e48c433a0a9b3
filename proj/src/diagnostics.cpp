#include "hweno/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace hweno {

namespace {

// acos in work precision: double seed plus two Newton corrections through
// sin_cos (quadratic convergence lands at the dd ulp after one).
WorkReal dd_acos(const WorkReal& x) {
  double seed = std::acos(std::min(1.0, std::max(-1.0, x.hi)));
  WorkReal th(seed);
  for (int it = 0; it < 2; ++it) {
    WorkReal s, c;
    sin_cos(th, s, c);
    th = th + (c - x) / s;
  }
  return th;
}

CxW cx_scale(const CxW& a, const WorkReal& f) { return {a.re * f, a.im * f}; }

// (r - i a cos th)^4 as an explicit complex square of a square.
CxW kerr_quartic(const WorkReal& r, const WorkReal& costh,
                 const PhysicalParams& p) {
  CxW q{r, -(p.a * costh)};
  CxW q2 = q * q;
  return q2 * q2;
}

WorkReal horizon_fraction(const Grid& g, const PhysicalParams& p, int* j0) {
  WorkReal t = (horizon_rho(p) - g.rho_min) / g.drho;
  *j0 = static_cast<int>(std::floor(t.hi));
  return t - WorkReal(*j0);
}

}  // namespace

CxW psi_to_phi(const CxW& psi, const WorkReal& r, const PhysicalParams& p) {
  if (std::isinf(r.hi))
    throw std::domain_error("psi_to_phi: conversion undefined at scri");
  WorkReal d = kerr_delta(r, p);
  if (d.hi == 0.0 && d.lo == 0.0)
    throw std::domain_error(
        "psi_to_phi: Delta = 0 at the horizon; Phi is the regular variable "
        "there");
  return cx_scale(psi, r / (d * d));
}

CxW psi4hh_from_phi(const CxW& phi, const WorkReal& r, const WorkReal& costh,
                    const PhysicalParams& p) {
  if (!(r.hi > 0.0)) throw std::domain_error("psi4hh_from_phi: need r > 0");
  WorkReal s = r * r + p.a * p.a;
  CxW num{WorkReal(4) * s * s, WorkReal(0)};
  CxW den = cx_scale(kerr_quartic(r, costh, p), r);
  return phi * (num / den);
}

CxW phi_from_psi4hh(const CxW& psi4, const WorkReal& r, const WorkReal& costh,
                    const PhysicalParams& p) {
  if (!(r.hi > 0.0)) throw std::domain_error("phi_from_psi4hh: need r > 0");
  WorkReal s = r * r + p.a * p.a;
  CxW num = cx_scale(kerr_quartic(r, costh, p), r);
  CxW den{WorkReal(4) * s * s, WorkReal(0)};
  return psi4 * (num / den);
}

CxW psi4k_from_phi(const CxW& phi, const WorkReal& r, const WorkReal& costh,
                   const PhysicalParams& p) {
  if (!(r.hi > 0.0)) throw std::domain_error("psi4k_from_phi: need r > 0");
  WorkReal d = kerr_delta(r, p);
  CxW num{d * d, WorkReal(0)};
  CxW den = cx_scale(kerr_quartic(r, costh, p), r);
  return phi * (num / den);
}

std::vector<WorkReal> one_sided_coeffs(int npts, int deriv,
                                       const WorkReal& x0) {
  if (npts < 2 || npts > 12 || deriv < 0 || deriv >= npts)
    throw std::invalid_argument(
        "one_sided_coeffs: need 2 <= npts <= 12 and 0 <= deriv < npts");
  const int n = npts;
  // A[t][i] = (i - x0)^t / t!; solve A c = e_deriv.
  std::vector<WorkReal> A(size_t(n) * n), rhs(n, WorkReal(0));
  for (int i = 0; i < n; ++i) {
    WorkReal d = WorkReal(i) - x0;
    WorkReal pw(1);
    for (int t = 0; t < n; ++t) {
      A[size_t(t) * n + i] = pw;
      pw = pw * d / WorkReal(t + 1);
    }
  }
  rhs[deriv] = WorkReal(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int row = col + 1; row < n; ++row)
      if (std::fabs(A[size_t(row) * n + col].hi) >
          std::fabs(A[size_t(piv) * n + col].hi))
        piv = row;
    if (A[size_t(piv) * n + col].hi == 0.0)
      throw std::runtime_error("one_sided_coeffs: singular stencil system");
    if (piv != col) {
      for (int cc = 0; cc < n; ++cc)
        std::swap(A[size_t(col) * n + cc], A[size_t(piv) * n + cc]);
      std::swap(rhs[col], rhs[piv]);
    }
    for (int row = col + 1; row < n; ++row) {
      WorkReal f = A[size_t(row) * n + col] / A[size_t(col) * n + col];
      if (f.hi == 0.0) continue;
      for (int cc = col; cc < n; ++cc)
        A[size_t(row) * n + cc] =
            A[size_t(row) * n + cc] - f * A[size_t(col) * n + cc];
      rhs[row] = rhs[row] - f * rhs[col];
    }
  }
  std::vector<WorkReal> c(n);
  for (int row = n - 1; row >= 0; --row) {
    WorkReal s = rhs[row];
    for (int cc = row + 1; cc < n; ++cc)
      s = s - A[size_t(row) * n + cc] * c[cc];
    c[row] = s / A[size_t(row) * n + row];
  }
  return c;
}

HorizonSampler::HorizonSampler(const Grid& g, const PhysicalParams& p,
                               const FieldLayout& lay, int ktheta)
    : lay_(lay), k_(ktheta) {
  if (ktheta < 0 || ktheta >= g.ntheta)
    throw std::invalid_argument("HorizonSampler: theta row out of range");
  WorkReal x0 = horizon_fraction(g, p, &j0_);
  if (j0_ < 0 || j0_ + 8 > g.nrho)
    throw std::invalid_argument(
        "HorizonSampler: horizon stencil leaves the grid");
  for (int d = 0; d < 4; ++d) {
    co_[d] = one_sided_coeffs(5 + d, d, x0);
    WorkReal hp(1);
    for (int q = 0; q < d; ++q) hp = hp * g.drho;
    for (auto& v : co_[d]) v = v / hp;
  }
}

HorizonObservables HorizonSampler::sample(const StateVec& u) const {
  HorizonObservables h;
  for (int d = 0; d < 4; ++d) {
    WorkReal sre(0), sim(0);
    for (size_t i = 0; i < co_[d].size(); ++i) {
      int j = j0_ + static_cast<int>(i);
      sre = sre + co_[d][i] * u[lay_.at(0, j, k_)];
      sim = sim + co_[d][i] * u[lay_.at(1, j, k_)];
    }
    if (d == 0)
      h.phi = {sre, sim};
    else
      h.dphi[d - 1] = {sre, sim};
  }
  return h;
}

CxW aretakis_charge(const StateVec& u, const FieldLayout& lay, const Grid& g,
                    const PhysicalParams& p, int ktheta) {
  return HorizonSampler(g, p, lay, ktheta).sample(u).dphi[0];
}

TimeSeries local_power_index(const TimeSeries& s) {
  TimeSeries out;
  out.label = s.label.empty() ? "p" : s.label + "_p";
  const size_t n = s.size();
  if (n < 5) return out;
  std::vector<WorkReal> amp(n);
  WorkReal peak(0);
  for (size_t i = 0; i < n; ++i) {
    amp[i] = sqrt(s.re[i] * s.re[i] + s.im[i] * s.im[i]);
    if (amp[i] > peak) peak = amp[i];
  }
  if (peak.hi == 0.0) return out;
  WorkReal thr = peak * WorkReal(1e-25);
  for (size_t i = 2; i + 2 < n; ++i) {
    bool usable = true;
    for (int q = -2; q <= 2; ++q)
      if (amp[i + q] < thr) {
        usable = false;
        break;
      }
    if (!usable) continue;
    WorkReal h12 = (s.tau[i + 1] - s.tau[i - 1]) * WorkReal(6);
    WorkReal da = (-amp[i + 2] + WorkReal(8) * amp[i + 1] -
                   WorkReal(8) * amp[i - 1] + amp[i - 2]) /
                  h12;
    out.push(s.tau[i], s.tau[i] * da / amp[i], WorkReal(0));
  }
  return out;
}

WindowStats window_stats(const TimeSeries& s, double t0, double t1) {
  WindowStats w;
  WorkReal acc(0);
  for (size_t i = 0; i < s.size(); ++i) {
    double t = to_double(s.tau[i]);
    if (t < t0 || t > t1) continue;
    WorkReal a = sqrt(s.re[i] * s.re[i] + s.im[i] * s.im[i]);
    if (w.count == 0) {
      w.min = a;
      w.max = a;
    } else {
      if (a < w.min) w.min = a;
      if (a > w.max) w.max = a;
    }
    acc = acc + a;
    ++w.count;
  }
  if (w.count > 0) w.mean = acc / WorkReal(double(w.count));
  return w;
}

WorkReal window_mean_re(const TimeSeries& s, double t0, double t1) {
  WorkReal acc(0);
  long count = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    double t = to_double(s.tau[i]);
    if (t < t0 || t > t1) continue;
    acc = acc + s.re[i];
    ++count;
  }
  if (count == 0) return WorkReal(0);
  return acc / WorkReal(double(count));
}

std::vector<WorkReal> theta_slice(const StateVec& u, const FieldLayout& lay,
                                  int comp, int j) {
  std::vector<WorkReal> slice(lay.ntheta);
  for (int k = 0; k < lay.ntheta; ++k) slice[k] = u[lay.at(comp, j, k)];
  return slice;
}

namespace {

WorkReal project_impl(const std::function<WorkReal(const WorkReal&)>& value,
                      int s, int mm, int ell, int nodes) {
  if (mm != 0)
    throw std::invalid_argument("multipole_project: only m = 0 supported");
  if (ell < std::abs(s))
    throw std::domain_error("multipole_project: need ell >= |s|");
  GaussLegendre gl = gauss_legendre(nodes);
  WorkReal acc(0);
  for (int i = 0; i < nodes; ++i) {
    WorkReal th = dd_acos(gl.x[i]);
    acc = acc + gl.w[i] * value(th) * spin_ylm_theta(s, ell, mm, th);
  }
  return acc * WorkReal(2) * dd_pi;
}

}  // namespace

WorkReal multipole_project(const std::vector<WorkReal>& slice, int s, int mm,
                           int ell) {
  const int nt = static_cast<int>(slice.size());
  if (nt < 2)
    throw std::invalid_argument("multipole_project: slice too short");
  const int parity = ((mm + s) % 2 == 0) ? 1 : -1;
  const WorkReal dth = dd_pi / WorkReal(nt);
  auto fetch = [&](int idx) -> WorkReal {
    if (idx < 0)
      return parity > 0 ? slice[-1 - idx] : -slice[-1 - idx];
    if (idx >= nt)
      return parity > 0 ? slice[2 * nt - 1 - idx] : -slice[2 * nt - 1 - idx];
    return slice[idx];
  };
  auto interp = [&](const WorkReal& th) -> WorkReal {
    WorkReal pos = th / dth - WorkReal(0.5);
    int k0 = static_cast<int>(std::floor(pos.hi));
    WorkReal f = pos - WorkReal(k0);
    WorkReal w0 = -f * (f - WorkReal(1)) * (f - WorkReal(2)) / WorkReal(6);
    WorkReal w1 = (f * f - WorkReal(1)) * (f - WorkReal(2)) / WorkReal(2);
    WorkReal w2 = -f * (f + WorkReal(1)) * (f - WorkReal(2)) / WorkReal(2);
    WorkReal w3 = f * (f + WorkReal(1)) * (f - WorkReal(1)) / WorkReal(6);
    return w0 * fetch(k0 - 1) + w1 * fetch(k0) + w2 * fetch(k0 + 1) +
           w3 * fetch(k0 + 2);
  };
  return project_impl(interp, s, mm, ell, std::max(nt, 2 * ell + 8));
}

WorkReal multipole_project_fn(const std::function<WorkReal(const WorkReal&)>& f,
                              int s, int mm, int ell, int nodes) {
  if (nodes < ell + 1)
    throw std::invalid_argument("multipole_project_fn: too few nodes");
  return project_impl(f, s, mm, ell, nodes);
}

}  // namespace hweno
