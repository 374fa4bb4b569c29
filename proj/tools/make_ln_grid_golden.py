#!/usr/bin/env python3
"""Regenerate tests/golden/ln_grid.csv.

Independent reference for the ln(x) Hermite interpolant on nodes 3, 6, 12, 24:
the bigeometric interpolant is exp of the classical Hermite interpolant of the
log-log data, which scipy's KroghInterpolator builds from repeated nodes.
"""
import math
import sys

import numpy as np
from scipy.interpolate import KroghInterpolator

nodes = [3.0, 6.0, 12.0, 24.0]
t = np.repeat([math.log(x) for x in nodes], 2)
y = []
for x in nodes:
    y.append(math.log(math.log(x)))  # log of f(x) = ln x
    y.append(1.0 / math.log(x))      # log of D_G ln at x
interp = KroghInterpolator(t, np.array(y))

grid = [3.0 + 0.25 * i for i in range(int((24.0 - 3.0) / 0.25) + 1)]
out = sys.stdout if len(sys.argv) < 2 else open(sys.argv[1], "w")
max_err = 0.0
rows = []
for x in grid:
    p = math.exp(float(interp(math.log(x))))
    max_err = max(max_err, abs(p - math.log(x)))
    rows.append((x, p))
print("# reference p_G(x) for f = ln on nodes 3,6,12,24", file=out)
print(f"# max_abs_error_vs_ln,{max_err:.17g}", file=out)
print("x,p_G(x)", file=out)
for x, p in rows:
    print(f"{x:.17g},{p:.17g}", file=out)
