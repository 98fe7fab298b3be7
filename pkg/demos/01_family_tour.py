"""Tour of the map families and their closed-form critical data.

Builds the degree-6 root-finding family at a few parameters, checks the
hallmark identities (roots of unity fixed and superattracting, rotational
symmetry, repelling fixed point at infinity), and prints the critical
points/values next to the brute-force root oracle.
"""

import numpy as np

from chdyn import (
    INF,
    ZETA,
    build_on_alpha,
    build_ra,
    critical_data_ra,
    find_roots,
    multiplier_at,
)

print("== the degree-6 family ==")
for a in (1.0, 0.0, 3.0, -0.0164):
    ra = build_ra(a)
    print(f"a = {a:>8}: degree {ra.degree}", end="")
    if a != 0:
        mu = multiplier_at(ra, INF)
        print(f", multiplier at infinity {mu:.6g} (formula 3(1+a)/2a = {3*(1+a)/(2*a):.6g})")
    else:
        print(", infinity swaps with the origin: R(0) =", ra(0j), ", R(inf) =", ra(INF))

print("\n== roots of unity are superattracting fixed points ==")
ra = build_ra(1.0)
for j in range(3):
    w = ZETA**j
    print(f"  R({w:.4f}) - w = {abs(ra(w) - w):.2e},  |R'(w)| = {abs(ra.deriv_at(w)):.2e}")

print("\n== critical data at a = -0.0164 vs the root oracle ==")
data = critical_data_ra(-0.0164)
ra = build_ra(-0.0164)
oracle = find_roots(ra.derivative_numerator())
for c, v in zip(data.critical_points, data.critical_values):
    nearest = min(oracle, key=lambda r: abs(r - c))
    print(f"  c = {c:.6f}  -> v = {v:.6f}   oracle dist {abs(c - nearest):.2e}")

print("\n== the general-n construction agrees for n = 3 ==")
F = build_on_alpha(3, (5 - 1.0) / 4)
G = build_ra(1.0)
z = np.exp(1j * np.linspace(0, 2 * np.pi, 7)[:-1]) * 1.7
print("  max |F - G| on a sample circle:", max(abs(F(complex(w)) - G(complex(w))) for w in z))
print("  n = 4 at the singular parameter 7/6 sends infinity to", build_on_alpha(4, 7 / 6)(INF))
