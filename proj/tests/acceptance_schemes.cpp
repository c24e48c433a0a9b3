#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hweno/harness.hpp"
#include "support/criteria.hpp"

using namespace hweno;

static const std::vector<int> kLadder{64, 128, 256, 512};

TEST_CASE("criterion 1: weno5 order on smooth periodic advection") {
  ConvergenceReport r = advection_convergence(Scheme::weno5, kLadder, -1.0,
                                              0.0);
  bool pass = r.order >= 4.5;
  criterion_line(1, pass,
                 "weno5 smooth-advection L-inf order %.3f (gate >= 4.5, "
                 "N in {64,128,256,512})",
                 r.order);
  CHECK(pass);
}

TEST_CASE("criterion 2: weno3 order on the same problem") {
  ConvergenceReport r = advection_convergence(Scheme::weno3, kLadder, -1.0,
                                              0.0);
  bool pass = r.order >= 2.5;
  criterion_line(2, pass,
                 "weno3 smooth-advection L-inf order %.3f (gate >= 2.5)",
                 r.order);
  CHECK(pass);
}

TEST_CASE("criterion 3: non-oscillatory step advection at CFL 0.3") {
  EnoReport w5 = advection_square_wave(Scheme::weno5, 200, 1e-6);
  EnoReport w3 = advection_square_wave(Scheme::weno3, 200, 1e-6);
  bool pass = w5.tv_growth <= 1e-2 && w5.overshoot <= 1e-2 &&
              w3.tv_growth <= 1e-2 && w3.overshoot <= 1e-2;
  criterion_line(3, pass,
                 "step advection one period: TV growth %.2e/%.2e, overshoot "
                 "%.2e/%.2e of the unit jump for weno5/weno3 (gates <= 1e-2)",
                 w5.tv_growth, w3.tv_growth, w5.overshoot, w3.overshoot);
  CHECK(w5.tv_growth <= 1e-2);
  CHECK(w5.overshoot <= 1e-2);
  CHECK(w3.tv_growth <= 1e-2);
  CHECK(w3.overshoot <= 1e-2);
}

TEST_CASE("criterion 4: SSP integrator orders and rk33 amplification") {
  const std::vector<int> ns{20, 40, 80, 160, 320};
  ConvergenceReport r33 = ode_convergence(StepperSpec::ssprk33, ns);
  ConvergenceReport r104 = ode_convergence(StepperSpec::ssprk104, ns);
  double amp = rk33_amplification_error();
  bool pass = r33.order >= 2.5 && r104.order >= 3.5 && amp <= 1e-28;
  criterion_line(4, pass,
                 "u' = -u orders: ssprk33 %.3f (gate >= 2.5), ssprk104 %.3f "
                 "(gate >= 3.5); rk33 one-step deviation from "
                 "1+z+z^2/2+z^3/6: %.2e (gate <= 1e-28)",
                 r33.order, r104.order, amp);
  CHECK(r33.order >= 2.5);
  CHECK(r104.order >= 3.5);
  CHECK(amp <= 1e-28);
}

TEST_CASE("criterion 5: FD6 and KO8 algebraic exactness") {
  Fd6Ko8Report r = fd6ko8_checks();
  bool pass = r.fd6_poly_err <= 1e-24 && r.ko8_poly_err <= 1e-24 &&
              r.sawtooth_err <= 1e-28;
  criterion_line(5, pass,
                 "FD6 degree-6 derivative error %.2e (gate <= 1e-24); KO8 "
                 "degree-7 residual %.2e (gate <= 1e-24); KO8 sawtooth vs "
                 "sigma(-1)^j/h: %.2e (gate <= 1e-28)",
                 r.fd6_poly_err, r.ko8_poly_err, r.sawtooth_err);
  CHECK(r.fd6_poly_err <= 1e-24);
  CHECK(r.ko8_poly_err <= 1e-24);
  CHECK(r.sawtooth_err <= 1e-28);
}
