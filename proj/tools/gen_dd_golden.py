#!/usr/bin/env python3
"""Generate frozen reference vectors for the pair-arithmetic tests.

Inputs are normalized (hi, lo) pairs emitted as exact C++ hexfloat literals;
expected results are the true values of hi+lo under each operation, evaluated
with mpmath at 60 significant digits and printed to 40 digits so the test can
pin the <= 1e-30 single-operation relative error contract with margin.

Output: tests/golden_ddreal.inc
"""

import math
import random
import mpmath as mp

mp.mp.dps = 60
random.seed(20260825)


def norm_pair(hi, lo):
    if math.isnan(hi) or math.isinf(hi):
        return None
    if float(hi + lo) != hi:  # not a normalized pair
        return None
    return hi, lo


def rand_dd(scale_lo=1.0):
    for _ in range(100):
        e = random.randint(-60, 60)
        hi = random.uniform(-1, 1) * (2.0 ** e)
        if hi == 0.0:
            continue
        lo = hi * (2.0 ** -53) * random.uniform(-0.5, 0.5) * scale_lo
        p = norm_pair(hi, lo)
        if p:
            return p
    raise RuntimeError("failed to build a normalized pair")


def mpv(p):
    return mp.mpf(p[0]) + mp.mpf(p[1])


rows = []


def add_row(op, a, b, res):
    rows.append((op, a, b, mp.nstr(res, 40, strip_zeros=False)))


pairs = [rand_dd() for _ in range(14)]
pairs += [(1.0, 0.0), (-1.0, 0.0), (0.5, 2.0 ** -55), (3.0, -(2.0 ** -52))]
for i in range(16):
    a = pairs[i % len(pairs)]
    b = pairs[(i * 7 + 3) % len(pairs)]
    add_row("add", a, b, mpv(a) + mpv(b))
    add_row("sub", a, b, mpv(a) - mpv(b))
    add_row("mul", a, b, mpv(a) * mpv(b))
    add_row("div", a, b, mpv(a) / mpv(b))

# near-total cancellation in subtraction
a = (1.0, 2.0 ** -55)
b = norm_pair(1.0 + 2.0 ** -50, 0.0)
add_row("sub", a, b, mpv(a) - mpv(b))

for p in pairs[:10]:
    ap = (abs(p[0]), abs(p[1]) if p[0] >= 0 else -p[1])
    ap = norm_pair(ap[0], ap[1]) or (abs(p[0]), 0.0)
    add_row("sqrt", ap, ap, mp.sqrt(mpv(ap)))

exp_args = [(0.0, 0.0), (1.0, 0.0), (-1.0, 2.0 ** -54), (0.1, 0.0),
            (-27.5, 2.0 ** -58), (11.25, 0.0), (-0.0009765625, 0.0),
            (640.0, 2.0 ** -45), (-640.0, 0.0)]
for p in exp_args:
    p = norm_pair(*p)
    add_row("exp", p, p, mp.exp(mpv(p)))

trig_args = [(0.0009765625, 0.0), (0.5, 2.0 ** -55), (1.0, 0.0),
             (1.5707963267948966, 6.123233995736766e-17),  # ~pi/2
             (2.75, 0.0), (3.0, -(2.0 ** -53)), (3.1414, 0.0),
             (0.04908738521234052, 0.0)]
for p in trig_args:
    p = norm_pair(*p)
    add_row("sin", p, p, mp.sin(mpv(p)))
    add_row("cos", p, p, mp.cos(mpv(p)))

with open("tests/golden_ddreal.inc", "w") as f:
    f.write("// Generated by tools/gen_dd_golden.py. Do not edit by hand.\n")
    f.write("struct GoldenDDRow {\n")
    f.write("  const char* op;\n")
    f.write("  double ahi, alo, bhi, blo;\n")
    f.write("  const char* expect;  // 40 significant digits\n")
    f.write("};\n")
    f.write("inline const GoldenDDRow golden_dd_rows[] = {\n")
    for (op, a, b, res) in rows:
        f.write(f'  {{"{op}", {a[0].hex()}, {a[1].hex()}, '
                f'{b[0].hex()}, {b[1].hex()},\n   "{res}"}},\n')
    f.write("};\n")
print(f"wrote tests/golden_ddreal.inc ({len(rows)} rows)")
