"""Sampling-based verification of the quantitative estimates.

Each check draws a seeded random (or grid) sample and tests an inequality
that drives the small-parameter analysis: the rotational symmetry identity,
the image-size bound on the critical annulus, the two-step expulsion from
the small disk around the pole, uniform convergence to the unperturbed map,
and the rigidity normalization round-trip.
"""

from chdyn import (
    check_annulus_bound,
    check_normalize_roundtrip,
    check_small_disk_bound,
    check_symmetry,
    check_uniform_convergence,
)


def show(res):
    status = "pass" if res.passed else "FAIL"
    extra = f"  {res.details}" if res.details else ""
    print(f"  [{status}] {res.lemma_id:<22} samples={res.samples:<6} worst={res.worst_ratio:.3e}{extra}")


print("symmetry R(zeta z) = zeta R(z):")
for a in (0.7 + 0.2j, 0.0, 3.0):
    show(check_symmetry(a))

print("\nannulus image bound |R(z)| < C1 |a|^(2/3) on |a|^(-1/3) < |z| < 3|a|^(-1/3):")
for a in (1e-4, 1e-5, 1e-6):
    show(check_annulus_bound(a))

print("\ntwo-step expulsion |R^2(z)| > |a|^(-1/3) on the disk |z| < 0.1 |a|^(2/3):")
for a in (1e-4, 1e-5, 1e-6):
    show(check_small_disk_bound(a))

print("\nuniform convergence to the unperturbed map on |z| <= 3:")
for a in (1e-3, 1e-4):
    show(check_uniform_convergence(a))

print("\nrigidity normalization round-trip (lambda recovered under rescaling):")
show(check_normalize_roundtrip())
