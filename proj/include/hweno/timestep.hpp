#pragma once

#include <stdexcept>
#include <vector>

#include "hweno/geometry.hpp"
#include "hweno/precision.hpp"

namespace hweno {

struct StepperSpec {
  enum Kind { ssprk33, ssprk104 };
  Kind kind = ssprk33;
  WorkReal cfl{0.5};

  int stages() const { return kind == ssprk33 ? 3 : 10; }
  // SSP coefficient C: forward-Euler step multiple the scheme tolerates
  WorkReal ssp_coefficient() const {
    return kind == ssprk33 ? WorkReal(1) : WorkReal(6);
  }
};

// dt = C * cfl * drho / max speed, with the forward-Euler proxy taken over
// both characteristic families.
inline WorkReal select_dt(const Grid& g, const CoefficientSet& c,
                          const StepperSpec& spec) {
  if (!(c.max_speed.hi > 0.0))
    throw std::runtime_error("select_dt: zero wave speed");
  return spec.ssp_coefficient() * spec.cfl * g.drho / c.max_speed;
}

using StateVec = std::vector<WorkReal>;

struct StepScratch {
  StateVec s1, s2, f, f4;
  void resize(size_t n) {
    s1.resize(n);
    s2.resize(n);
    f.resize(n);
    f4.resize(n);
  }
};

struct SerialExec {
  template <class Fn>
  void operator()(size_t n, Fn&& fn) const {
    for (size_t i = 0; i < n; ++i) fn(i);
  }
};

// u^(1) = u + dt F(u)
// u^(2) = 3/4 u + 1/4 (u^(1) + dt F(u^(1)))
// u'    = 1/3 u + 2/3 (u^(2) + dt F(u^(2)))
template <class Rhs, class Exec = SerialExec>
void ssprk33_step(StateVec& u, const WorkReal& dt, Rhs&& F, StepScratch& scr,
                  Exec&& exec = Exec{}) {
  const size_t n = u.size();
  scr.resize(n);
  const WorkReal c34 = WorkReal(3) / WorkReal(4), c14 = WorkReal(1) / WorkReal(4);
  const WorkReal c13 = WorkReal(1) / WorkReal(3), c23 = WorkReal(2) / WorkReal(3);
  F(u, scr.f);
  exec(n, [&](size_t i) { scr.s1[i] = u[i] + dt * scr.f[i]; });
  F(scr.s1, scr.f);
  exec(n, [&](size_t i) {
    scr.s1[i] = c34 * u[i] + c14 * (scr.s1[i] + dt * scr.f[i]);
  });
  F(scr.s1, scr.f);
  exec(n, [&](size_t i) {
    u[i] = c13 * u[i] + c23 * (scr.s1[i] + dt * scr.f[i]);
  });
}

// u^(i) = u^(i-1) + dt/6 F(u^(i-1)),                       i = 1..4
// u^(5) = 3/5 u + 2/5 u^(4) + dt/15 F(u^(4))
// u^(i) = u^(i-1) + dt/6 F(u^(i-1)),                       i = 6..9
// u'    = 1/25 u + 9/25 u^(4) + 3/5 u^(9)
//         + 3/50 dt F(u^(4)) + 1/10 dt F(u^(9))
template <class Rhs, class Exec = SerialExec>
void ssprk104_step(StateVec& u, const WorkReal& dt, Rhs&& F, StepScratch& scr,
                   Exec&& exec = Exec{}) {
  const size_t n = u.size();
  scr.resize(n);
  const WorkReal dt6 = dt / WorkReal(6);
  scr.s1 = u;
  for (int i = 1; i <= 4; ++i) {
    F(scr.s1, scr.f);
    exec(n, [&](size_t i2) { scr.s1[i2] = scr.s1[i2] + dt6 * scr.f[i2]; });
  }
  scr.s2 = scr.s1;  // u^(4)
  F(scr.s1, scr.f4);
  const WorkReal c35 = WorkReal(3) / WorkReal(5), c25 = WorkReal(2) / WorkReal(5);
  const WorkReal dt15 = dt / WorkReal(15);
  exec(n, [&](size_t i2) {
    scr.s1[i2] = c35 * u[i2] + c25 * scr.s1[i2] + dt15 * scr.f4[i2];
  });
  for (int i = 6; i <= 9; ++i) {
    F(scr.s1, scr.f);
    exec(n, [&](size_t i2) { scr.s1[i2] = scr.s1[i2] + dt6 * scr.f[i2]; });
  }
  F(scr.s1, scr.f);
  const WorkReal c125 = WorkReal(1) / WorkReal(25);
  const WorkReal c925 = WorkReal(9) / WorkReal(25);
  const WorkReal c350 = WorkReal(3) / WorkReal(50);
  const WorkReal c110 = WorkReal(1) / WorkReal(10);
  exec(n, [&](size_t i2) {
    u[i2] = c125 * u[i2] + c925 * scr.s2[i2] + c35 * scr.s1[i2] +
            dt * (c350 * scr.f4[i2] + c110 * scr.f[i2]);
  });
}

template <class Rhs, class Exec = SerialExec>
void stepper_step(const StepperSpec& spec, StateVec& u, const WorkReal& dt,
                  Rhs&& F, StepScratch& scr, Exec&& exec = Exec{}) {
  if (spec.kind == StepperSpec::ssprk33)
    ssprk33_step(u, dt, F, scr, exec);
  else
    ssprk104_step(u, dt, F, scr, exec);
}

}  // namespace hweno
