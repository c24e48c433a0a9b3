#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hweno/spatial.hpp"

using namespace hweno;

namespace {

DDReal rat(long long p, long long q) { return DDReal(p) / DDReal(q); }

// convergence slope from errors at successive doublings
double slope(const std::vector<double>& err) {
  double s = 0.0;
  for (size_t i = 1; i < err.size(); ++i)
    s += std::log2(err[i - 1] / err[i]);
  return s / double(err.size() - 1);
}

// sample u(x)=sin(x) on n interior points spanning [0, 2], with 4 ghosts
std::vector<WorkReal> sine_row(int n, WorkReal& drho) {
  drho = rat(2, 1) / WorkReal(n - 1);
  std::vector<WorkReal> u(n + 8);
  for (int j = -4; j < n + 4; ++j) u[j + 4] = sin(drho * WorkReal(j));
  return u;
}

}  // namespace

TEST_CASE("weno5 weights: constant, linear, step windows") {
  const WorkReal eps(1e-6);
  auto check_linearish = [&](const WorkReal* a) {
    WorkReal wf[3];
    weno5_weights_t(a[0], a[1], a[2], a[3], a[4], eps, wf);
    CHECK(abs(wf[0] - rat(1, 10)).hi <= 1e-30);
    CHECK(abs(wf[1] - rat(6, 10)).hi <= 1e-30);
    CHECK(abs(wf[2] - rat(3, 10)).hi <= 1e-30);
    WeightReal wm[3];
    weno5_weights_t(a[0], a[1], a[2], a[3], a[4], WeightReal(1e-6), wm);
    CHECK(std::fabs(wm[0] - 0.1) <= 1e-15);
    CHECK(std::fabs(wm[1] - 0.6) <= 1e-15);
    CHECK(std::fabs(wm[2] - 0.3) <= 1e-15);
  };
  WorkReal cons[5] = {DDReal(7), DDReal(7), DDReal(7), DDReal(7), DDReal(7)};
  check_linearish(cons);
  WorkReal lin[5] = {DDReal(0), DDReal(1), DDReal(2), DDReal(3), DDReal(4)};
  check_linearish(lin);

  // step (0,0,0,1,1): hand-evaluated IS = (0, 4/3, 10/3)
  WorkReal st[5] = {DDReal(0), DDReal(0), DDReal(0), DDReal(1), DDReal(1)};
  WorkReal w[3];
  weno5_weights_t(st[0], st[1], st[2], st[3], st[4], eps, w);
  WorkReal a0 = rat(1, 10) / (eps * eps);
  WorkReal e1 = eps + rat(4, 3), e2 = eps + rat(10, 3);
  WorkReal a1 = rat(6, 10) / (e1 * e1);
  WorkReal a2 = rat(3, 10) / (e2 * e2);
  WorkReal inv = WorkReal(1) / (a0 + a1 + a2);
  CHECK((abs(w[0] - a0 * inv) / w[0]).hi <= 1e-28);
  CHECK((abs(w[1] - a1 * inv) / w[1]).hi <= 1e-25);
  CHECK((abs(w[2] - a2 * inv) / w[2]).hi <= 1e-25);
  CHECK(w[2].hi <= 1e-10 * w[0].hi);  // discontinuous stencil suppressed
  CHECK(abs(w[0] + w[1] + w[2] - WorkReal(1)).hi <= 1e-30);
}

TEST_CASE("weno5 flux: constants, quadratic exactness, smooth order") {
  const WorkReal eps(1e-6);
  WorkReal c(3.25);
  WorkReal cw[9];
  for (auto& x : cw) x = c;
  for (bool minus : {false, true}) {
    std::vector<WorkReal> row(16 + 8, c);
    std::vector<WorkReal> du(16);
    weno5_row_derivative(row.data() + 4, 16, WorkReal(0.1), eps, minus,
                         du.data());
    for (auto& d : du) CHECK(abs(d).hi <= 1e-28);
  }
  // quadratic data: flux difference reproduces d(rho^2)/drho = 2 rho exactly
  int n = 24;
  WorkReal h = rat(1, 10);
  std::vector<WorkReal> u(n + 8), du(n);
  for (int j = -4; j < n + 4; ++j) {
    WorkReal x = h * WorkReal(j);
    u[j + 4] = x * x;
  }
  for (bool minus : {false, true}) {
    weno5_row_derivative(u.data() + 4, n, h, eps, minus, du.data());
    for (int j = 0; j < n; ++j) {
      WorkReal x = h * WorkReal(j);
      CHECK(abs(du[j] - WorkReal(2) * x).hi <= 1e-27);
    }
  }
  // smooth sine: 5th order
  for (bool minus : {false, true}) {
    std::vector<double> errs;
    for (int N : {64, 128, 256, 512}) {
      WorkReal dr;
      auto row = sine_row(N, dr);
      std::vector<WorkReal> d(N);
      weno5_row_derivative(row.data() + 4, N, dr, eps, minus, d.data());
      double mx = 0.0;
      for (int j = 0; j < N; ++j)
        mx = std::max(mx, std::fabs((d[j] - cos(dr * WorkReal(j))).hi));
      errs.push_back(mx);
    }
    CHECK(slope(errs) >= 4.5);
  }
}

TEST_CASE("weno3 flux: constants, linear exactness, smooth order") {
  const WorkReal eps(1e-6);
  int n = 24;
  WorkReal h = rat(1, 8);
  std::vector<WorkReal> u(n + 8), du(n);
  for (int j = -4; j < n + 4; ++j) u[j + 4] = WorkReal(5) - rat(3, 7) * WorkReal(j);
  for (bool minus : {false, true}) {
    weno3_row_derivative(u.data() + 4, n, h, eps, minus, du.data());
    for (int j = 0; j < n; ++j)
      CHECK(abs(du[j] - rat(-3, 7) / h).hi <= 1e-27);
  }
  for (bool minus : {false, true}) {
    std::vector<double> errs;
    for (int N : {64, 128, 256, 512}) {
      WorkReal dr;
      auto row = sine_row(N, dr);
      std::vector<WorkReal> d(N);
      weno3_row_derivative(row.data() + 4, N, dr, eps, minus, d.data());
      double mx = 0.0;
      for (int j = 0; j < N; ++j)
        mx = std::max(mx, std::fabs((d[j] - cos(dr * WorkReal(j))).hi));
      errs.push_back(mx);
    }
    CHECK(slope(errs) >= 2.5);
  }
}

TEST_CASE("smooth-regime weights approach linear weights at second order") {
  const WorkReal eps(1e-6);
  std::vector<double> dev;
  for (int N : {64, 128, 256, 512}) {
    WorkReal dr = rat(2, 1) / WorkReal(N);
    // window centered mid-domain on sin
    WorkReal a[5];
    for (int i = 0; i < 5; ++i)
      a[i] = sin(WorkReal(1) + dr * WorkReal(i - 2));
    WorkReal w[3];
    weno5_weights_t(a[0], a[1], a[2], a[3], a[4], eps, w);
    double d = std::max({std::fabs((w[0] - rat(1, 10)).hi),
                         std::fabs((w[1] - rat(6, 10)).hi),
                         std::fabs((w[2] - rat(3, 10)).hi)});
    dev.push_back(d);
  }
  double s = slope(dev);
  CHECK(s >= 1.5);
  CHECK(s <= 3.0);
}

TEST_CASE("mixed and full modes agree to weight precision on smooth data") {
  int N = 128;
  WorkReal dr;
  auto row = sine_row(N, dr);
  std::vector<WorkReal> dfull(N), dmix(N);
  weno5_row_derivative(row.data() + 4, N, dr, WorkReal(1e-6), false,
                       dfull.data());
  weno5_row_derivative(row.data() + 4, N, dr, WeightReal(1e-6), false,
                       dmix.data());
  for (int j = 0; j < N; ++j) {
    double rel = std::fabs((dfull[j] - dmix[j]).hi) /
                 std::max(1.0, std::fabs(dfull[j].hi));
    CHECK(rel <= 1e-12);
  }
}

TEST_CASE("upwind direction keeps a step monotone under one Euler step") {
  // advect a step periodically: right-moving uses the plus-biased side,
  // left-moving the minus-biased side; CFL 0.3
  int n = 64;
  WorkReal h = WorkReal(1) / WorkReal(n);
  for (bool moving_right : {true, false}) {
    std::vector<WorkReal> u(n + 8), du(n);
    auto val = [&](int j) {
      int jj = ((j % n) + n) % n;
      return (jj >= 16 && jj < 48) ? WorkReal(1) : WorkReal(0);
    };
    for (int j = -4; j < n + 4; ++j) u[j + 4] = val(j);
    weno5_row_derivative(u.data() + 4, n, h, WeightReal(1e-6), !moving_right,
                         du.data());
    WorkReal v = moving_right ? WorkReal(1) : WorkReal(-1);
    WorkReal dt = rat(3, 10) * h;
    std::vector<double> next(n);
    for (int j = 0; j < n; ++j) next[j] = (u[j + 4] - v * dt * du[j]).hi;
    double mn = 1e300, mx = -1e300;
    for (double x : next) { mn = std::min(mn, x); mx = std::max(mx, x); }
    CHECK(mn >= -1e-2);
    CHECK(mx <= 1.0 + 1e-2);
  }
}

TEST_CASE("fd6 derivative: low-degree exactness and sixth order") {
  WorkReal h = rat(1, 16);
  WorkReal win[7];
  for (int i = 0; i < 7; ++i) win[i] = h * WorkReal(i - 3) + WorkReal(2);
  CHECK(abs(fd6_derivative(win + 3, h) - WorkReal(1)).hi <= 1e-28);
  for (int i = 0; i < 7; ++i) {
    WorkReal x = WorkReal(2) + h * WorkReal(i - 3);
    WorkReal x3 = x * x * x;
    win[i] = x3 * x3;
  }
  WorkReal expect = WorkReal(6 * 32);  // 6 * 2^5
  CHECK((abs(fd6_derivative(win + 3, h) - expect) / expect).hi <= 1e-28);
  std::vector<double> errs;
  for (int N : {64, 128, 256, 512}) {
    WorkReal dr;
    auto row = sine_row(N, dr);
    std::vector<WorkReal> d(N);
    fd6_row_derivative(row.data() + 4, N, dr, d.data());
    double mx = 0.0;
    for (int j = 0; j < N; ++j)
      mx = std::max(mx, std::fabs((d[j] - cos(dr * WorkReal(j))).hi));
    errs.push_back(mx);
  }
  CHECK(slope(errs) >= 5.5);
}

TEST_CASE("ko8 dissipation: annihilation, sawtooth, linearity") {
  WorkReal h = rat(1, 32), sigma = rat(1, 100);
  // any degree-7 polynomial vanishes
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uc(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    double c[8];
    for (auto& x : c) x = uc(rng);
    WorkReal win[9];
    double scale = 0.0;
    for (int i = 0; i < 9; ++i) {
      WorkReal x = h * WorkReal(i - 4);
      WorkReal acc(0);
      for (int p = 7; p >= 0; --p) acc = acc * x + WorkReal(c[p]);
      win[i] = acc;
      scale = std::max(scale, std::fabs(acc.hi));
    }
    CHECK(abs(ko8_dissipation(win + 4, sigma, h)).hi <=
          1e-26 * std::max(1.0, scale) / h.hi);
  }
  // sawtooth: exactly sigma(-1)^j/h
  std::vector<WorkReal> saw(40 + 8), q(40);
  for (int j = -4; j < 44; ++j) saw[j + 4] = WorkReal((j % 2 == 0) ? 1 : -1);
  ko8_row(saw.data() + 4, 40, sigma, h, q.data());
  for (int j = 0; j < 40; ++j) {
    WorkReal expect = sigma * WorkReal((j % 2 == 0) ? 1 : -1) / h;
    CHECK(abs(q[j] - expect).hi <= 1e-28 * std::fabs(expect.hi));
  }
  // linearity is exact
  WorkReal u1[9], u2[9], u3[9];
  for (int i = 0; i < 9; ++i) {
    u1[i] = WorkReal(uc(rng));
    u2[i] = WorkReal(uc(rng));
    u3[i] = rat(2, 3) * u1[i] - rat(7, 5) * u2[i];
  }
  WorkReal q3 = ko8_dissipation(u3 + 4, sigma, h);
  WorkReal expect = rat(2, 3) * ko8_dissipation(u1 + 4, sigma, h) -
                    rat(7, 5) * ko8_dissipation(u2 + 4, sigma, h);
  CHECK(abs(q3 - expect).hi <= 1e-27);
}

TEST_CASE("fd6ko composite symbol has non-positive real part") {
  // periodic row, discrete Fourier mode exp(i kappa j); the composite
  // right-hand-side operator for unit-speed advection is -D6 - Q
  int n = 32;
  WorkReal h = WorkReal(1) / WorkReal(n);
  WorkReal sigma = rat(1, 100);
  for (int mode = 0; mode <= n / 2; ++mode) {
    double kappa = 2.0 * M_PI * mode / n;
    std::vector<WorkReal> ur(n + 8), ui(n + 8);
    for (int j = -4; j < n + 4; ++j) {
      ur[j + 4] = cos(WorkReal(kappa) * WorkReal(j));
      ui[j + 4] = sin(WorkReal(kappa) * WorkReal(j));
    }
    std::vector<WorkReal> dr(n), di(n), qr(n), qi(n);
    fd6_row_derivative(ur.data() + 4, n, h, dr.data());
    fd6_row_derivative(ui.data() + 4, n, h, di.data());
    ko8_row(ur.data() + 4, n, sigma, h, qr.data());
    ko8_row(ui.data() + 4, n, sigma, h, qi.data());
    // eigenvalue at j where |u| = 1: L u = (-d - q); Re(lambda) =
    // Re((L u)_j conj(u_j)) with |u_j|=1
    for (int j : {0, 5, 17}) {
      double lur = (-dr[j] - qr[j]).hi, lui = (-di[j] - qi[j]).hi;
      double re = lur * ur[j + 4].hi + lui * ui[j + 4].hi;
      double expect = -(sigma.hi / h.hi) * std::pow(std::sin(kappa / 2.0), 8);
      CHECK(re <= 1e-12);
      CHECK(std::fabs(re - expect) <= 1e-9 * std::max(1.0, std::fabs(expect)));
    }
  }
}

TEST_CASE("theta derivatives: constants, cos, spherical eigenfunction") {
  int n = 16;
  WorkReal dth = dd_pi / WorkReal(n);
  std::vector<WorkReal> col(n + 4, WorkReal(4.5)), d1(n), d2(n);
  theta_derivatives_column(col.data() + 2, n, 1, dth, d1.data(), d2.data());
  for (int k = 0; k < n; ++k) {
    CHECK(abs(d1[k]).hi <= 1e-27);
    CHECK(abs(d2[k]).hi <= 1e-25);
  }

  auto theta_at = [](int k, const WorkReal& dt) {
    return dt * (WorkReal(k) + rat(1, 2));
  };
  std::vector<double> errs;
  for (int N : {16, 32, 64, 128}) {
    WorkReal dt = dd_pi / WorkReal(N);
    std::vector<WorkReal> c(N + 4), dd2(N);
    for (int k = -2; k < N + 2; ++k) c[k + 2] = cos(theta_at(k, dt));
    theta_derivatives_column(c.data() + 2, N, 1, dt, nullptr, dd2.data());
    double mx = 0.0;
    for (int k = 0; k < N; ++k)
      mx = std::max(mx, std::fabs((dd2[k] + cos(theta_at(k, dt))).hi));
    errs.push_back(mx);
  }
  CHECK(slope(errs) >= 3.5);

  // P2(cos th): (d_thth + cot th d_th) P2 = -6 P2
  errs.clear();
  for (int N : {16, 32, 64, 128}) {
    WorkReal dt = dd_pi / WorkReal(N);
    std::vector<WorkReal> c(N + 4), e1(N), e2(N);
    for (int k = -2; k < N + 2; ++k) {
      WorkReal x = cos(theta_at(k, dt));
      c[k + 2] = (WorkReal(3) * x * x - WorkReal(1)) / WorkReal(2);
    }
    theta_derivatives_column(c.data() + 2, N, 1, dt, e1.data(), e2.data());
    double mx = 0.0;
    for (int k = 0; k < N; ++k) {
      WorkReal th = theta_at(k, dt);
      WorkReal x = cos(th);
      WorkReal p2 = (WorkReal(3) * x * x - WorkReal(1)) / WorkReal(2);
      WorkReal got = e2[k] + (cos(th) / sin(th)) * e1[k];
      mx = std::max(mx, std::fabs((got + WorkReal(6) * p2).hi));
    }
    errs.push_back(mx);
  }
  CHECK(slope(errs) >= 3.5);
}
