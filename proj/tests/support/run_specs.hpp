#pragma once

// Embedded copies of the production run configurations (byte-identical to
// the files under configs/), so the acceptance binaries can locate or
// regenerate run artifacts without depending on a source-tree path.

inline constexpr const char* kSpecTailWeno5Mixed = R"ini(# Extremal Kerr s = -2 late-time tail, production WENO5 mixed-precision run.
[physics]
M = 1
a = 1
s = -2
m = 0
S = 20
ell = 2
center = 1.0
width = 0.22
amplitude = 1

[grid]
nrho = 2048
ntheta = 32

[scheme]
scheme = weno5
precision = mixed
epsilon = 1e-6
sigma = 0.01

[time]
stepper = ssprk104
cfl = 0.5
tau_end = 500
window_start = 400
window_end = 500

[output]
directory = runs/tail_weno5_mixed
series_cadence = 0.25
snapshot_cadence = 0
checkpoint_cadence = 50
observer_rho = 10

[parallel]
workers = 1
)ini";

inline constexpr const char* kSpecTailWeno5Full = R"ini(# Extremal Kerr s = -2 late-time tail, full double-double twin of the production run.
[physics]
M = 1
a = 1
s = -2
m = 0
S = 20
ell = 2
center = 1.0
width = 0.22
amplitude = 1

[grid]
nrho = 2048
ntheta = 32

[scheme]
scheme = weno5
precision = full
epsilon = 1e-6
sigma = 0.01

[time]
stepper = ssprk104
cfl = 0.5
tau_end = 500
window_start = 400
window_end = 500

[output]
directory = runs/tail_weno5_full
series_cadence = 0.25
snapshot_cadence = 0
checkpoint_cadence = 50
observer_rho = 10

[parallel]
workers = 1
)ini";

inline constexpr const char* kSpecTailWeno3Mixed = R"ini(# Extremal Kerr s = -2 late-time tail, WENO3 comparison run.
[physics]
M = 1
a = 1
s = -2
m = 0
S = 20
ell = 2
center = 1.0
width = 0.22
amplitude = 1

[grid]
nrho = 2048
ntheta = 32

[scheme]
scheme = weno3
precision = mixed
epsilon = 1e-6
sigma = 0.01

[time]
stepper = ssprk104
cfl = 0.5
tau_end = 500
window_start = 400
window_end = 500

[output]
directory = runs/tail_weno3_mixed
series_cadence = 0.25
snapshot_cadence = 0
checkpoint_cadence = 50
observer_rho = 10

[parallel]
workers = 1
)ini";

inline constexpr const char* kSpecTailFd6koMixed = R"ini(# Extremal Kerr s = -2 late-time tail, FD6+KO8 comparison run.
[physics]
M = 1
a = 1
s = -2
m = 0
S = 20
ell = 2
center = 1.0
width = 0.22
amplitude = 1

[grid]
nrho = 2048
ntheta = 32

[scheme]
scheme = fd6ko
precision = mixed
epsilon = 1e-6
sigma = 0.01

[time]
stepper = ssprk104
cfl = 0.5
tau_end = 500
window_start = 400
window_end = 500

[output]
directory = runs/tail_fd6ko_mixed
series_cadence = 0.25
snapshot_cadence = 0
checkpoint_cadence = 50
observer_rho = 10

[parallel]
workers = 1
)ini";

inline constexpr const char* kSpecFd6koNodiss = R"ini(# Extremal Kerr s = -2 late-time tail, FD6 run with dissipation off (stability study).
[physics]
M = 1
a = 1
s = -2
m = 0
S = 20
ell = 2
center = 1.0
width = 0.22
amplitude = 1

[grid]
nrho = 2048
ntheta = 32

[scheme]
scheme = fd6ko
precision = mixed
epsilon = 1e-6
sigma = 0

[time]
stepper = ssprk104
cfl = 0.5
tau_end = 200
window_start = 150
window_end = 200

[output]
directory = runs/fd6ko_nodiss
series_cadence = 0.25
snapshot_cadence = 0
checkpoint_cadence = 50
observer_rho = 10

[parallel]
workers = 1
)ini";

inline constexpr const char* kSpecPriceSchw = R"ini(# Schwarzschild scalar l = 2 Price-tail run, observer at r = 20 M.
[physics]
M = 1
a = 0
s = 0
m = 0
S = 20
ell = 2
center = 3.0
width = 0.3
amplitude = 1

[grid]
nrho = 1024
ntheta = 16

[scheme]
scheme = weno5
precision = mixed
epsilon = 1e-6
sigma = 0.01

[time]
stepper = ssprk104
cfl = 0.5
tau_end = 800
window_start = 500
window_end = 750

[output]
directory = runs/price_schw
series_cadence = 0.25
snapshot_cadence = 0
checkpoint_cadence = 100
observer_rho = 10

[parallel]
workers = 1
)ini";
