#!/usr/bin/env python3
"""First-order scattering on V = alpha/r^2.

The Born phase shifts have the closed form -pi*alpha/(2(2l+1)), checked
here against direct quadrature of the defining integral. The resulting
partial-wave series has constant coefficients, so its partial sums
oscillate like the unit-series example; the closed-form amplitude
-pi*alpha/(4k sin(theta/2)) is the oracle the resummation must match.
"""

import numpy as np

from legpade import (
    PotentialSpec,
    born_exact_invr2,
    born_phase_shift,
    born_series,
    construct,
    eval_partial_sum,
    evaluate,
)

ALPHA, K = 1.0, 1.0
pot = PotentialSpec("inverse_r2", ALPHA)

print("Born phase shifts: closed form vs quadrature of -k int j_l^2 V r^2 dr")
for l in range(5):
    closed = born_phase_shift(pot, l, K)
    quadrature = born_phase_shift(pot, l, K, method="quadrature")
    print(f"  l = {l}: {closed:+.12f}  vs  {quadrature:+.12f}   (dev {abs(closed - quadrature):.1e})")

series = born_series(pot, 8, K)
print(f"\nseries coefficients are constant: c_l = {series.coefficients[0].real:.6f}")

approx, _ = construct(series, 3, 3)
print("\n       theta   partial(N=6)        [3/3]        exact")
partial6 = born_series(pot, 6, K)
for theta in np.linspace(np.pi / 2, np.pi, 8):
    p = eval_partial_sum(partial6, theta).real
    q = evaluate(approx, theta).real
    e = born_exact_invr2(theta, ALPHA, K)
    print(f"  {theta:10.6f}  {p:12.6f}  {q:12.6f}  {e:12.6f}")

thetas = np.linspace(np.pi / 2, np.pi, 300)
worst = max(
    abs(evaluate(approx, t) - born_exact_invr2(t, ALPHA, K)) / abs(born_exact_invr2(t, ALPHA, K))
    for t in thetas
)
print(f"\nworst [3/3] relative deviation on [pi/2, pi]: {worst:.2e}")
print("\nCSV with the full sweep: legpade compare --demo invr2 --N 6 -o born.csv")
