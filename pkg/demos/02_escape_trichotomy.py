"""Escape-trichotomy classification of critical orbits.

The perturbed power maps z^n + lambda/z^d fall into three Julia-set shapes
when every critical orbit escapes: a Cantor set (immediate escape), a Cantor
set of circles (escape through the trap door in one step), or a Sierpinski
carpet (later escape).  The same trichotomy is read off the root-finding
family near its singular parameter using metric proxies.
"""

from chdyn import McMullenParams, classify_mcmullen, classify_ra
from chdyn.plane import _json_value, report_document

print("== perturbed power maps z^4 + lambda/z^2 ==")
for lam in (0.005, -0.28, -0.455):
    rep = classify_mcmullen(McMullenParams(4, 2, lam))
    m = f", escape count m = {rep.m}" if rep.m else ""
    print(f"  lambda = {lam:>7}: {rep.julia_class.value}{m}")
    print(f"    events: {rep.evidence.events}")

print("\n== root-finding family near a = 0 ==")
for a in (-0.0003, -0.0164, -0.028):
    rep = classify_ra(a)
    m = f", m = {rep.m}" if rep.m else ""
    print(f"  a = {a:>8}: {rep.julia_class.value}{m}")

print("\n== full report document for the Sierpinski anchor ==")
print(_json_value(report_document(classify_ra(-0.0164))))
