"""
Counting fixed points of two quartic operators
===============================================

Two operators whose ratio quintics have tidy roots, run through the whole
pipeline: quintic, resolvent cubic, closed-form extrema, sign pattern, count.
"""

import math

from quartix import QuarticOperator, count_fixed_points

###############################################################################
# Three fixed points, two of them tangential
# -------------------------------------------
# The reduced coefficients below give the ratio quintic
# (x-1)^2 (x-2)^2 (x-4).  The extrema are 1, (25-sqrt(105))/10, 2 and
# (25+sqrt(105))/10, and the quintic vanishes at the first and third.
op = QuarticOperator([56, 2, 7, 1, 1], [16, 1, 12, 1.25, 14])
rep = count_fixed_points(op)
print(rep.to_text())

print("closed-form extrema :", rep.lambdas)
print("expected            :", [1, (25 - math.sqrt(105)) / 10, 2, (25 + math.sqrt(105)) / 10])

###############################################################################
# One coefficient makes all the difference
# ----------------------------------------
# Lower a0 from 56 to 52 and mu4 drops from 52 to 48.  The double roots
# disappear and only one positive fixed point survives.
rep = count_fixed_points(QuarticOperator([52, 2, 7, 1, 1], [16, 1, 12, 1.25, 14]))
print("mu    =", rep.mu)
print("n_fix =", rep.n_fix, " xi =", [round(fp.xi, 6) for fp in rep.fixed_points])

###############################################################################
# Five fixed points
# -----------------
# Here P5'(x) = (x-1)(x-2)(x-3)(x-5) and the quintic alternates in sign at the
# extrema, so every monotone piece crosses zero once.
op = QuarticOperator([31, 1 / 8, 43 / 18, 1 / 16, 1 / 5], [10, 1 / 4, 31 / 6, 1 / 6, 3])
rep = count_fixed_points(op)
print(rep.to_text())

for fp in rep.fixed_points:
    u, v = op(fp.x, fp.y)
    print(f"xi={fp.xi:.6f}  |Q(x,y) - (x,y)| = {max(abs(u - fp.x), abs(v - fp.y)):.1e}")
