"""Critical-orbit fate classification.

For the perturbed power maps the escape trichotomy reads off how many
iterates the critical orbit needs to enter a forward-invariant neighbourhood
of infinity: never -> Cantor-candidate unresolved, directly -> Cantor set,
through the trap door at step 1 -> Cantor set of circles, later -> Sierpinski
carpet.  For the root-finding family the same trichotomy is read off the
orbit of a critical value under the second iterate, with metric proxies for
the trap door (pole-passage past a magnitude threshold) and the basin entry
(proximity to a root of unity).
"""

import enum
from dataclasses import dataclass, field

from .errors import DegenerateParameter, ParameterTooLarge
from .families import ZETA, build_mcmullen, build_ra, critical_values_ra, mcmullen_critical_points
from .rational import INF


class JuliaClass(enum.Enum):
    CANTOR = "Cantor"
    CANTOR_CIRCLES = "CantorCircles"
    SIERPINSKI = "Sierpinski"
    UNRESOLVED = "Unresolved"


ESCAPE = "escape"
POLE_PASSAGE = "pole-passage"
ROOT_PROXIMITY = "root-proximity"

# relative slack around a deciding threshold below which the verdict is suspect
BOUNDARY_SLACK = 0.1


@dataclass
class OrbitRecord:
    points: list = field(default_factory=list)
    events: list = field(default_factory=list)  # (index, kind)
    truncated: bool = False


@dataclass
class TrichotomyReport:
    julia_class: JuliaClass
    m: int | None
    evidence: OrbitRecord
    thresholds: dict
    boundary_adjacent: bool = False
    params: dict = field(default_factory=dict)


def escape_radius(p):
    """Radius R with |M(z)| >= 2|z| for |z| >= R: max(1, (2+|lambda|)^(1/(n-1)))."""
    return max(1.0, (2.0 + abs(p.lam)) ** (1.0 / (p.n - 1)))


def orbit(F, z0, max_iter, stop_radius):
    """Iterate F from z0 until escape past stop_radius, an exact pole hit, or max_iter."""
    rec = OrbitRecord(points=[complex(z0)])
    z = complex(z0)
    for k in range(1, max_iter + 1):
        z = F(z)
        if z is INF:
            rec.events.append((k, POLE_PASSAGE))
            rec.truncated = True
            return rec
        rec.points.append(z)
        if min(abs(z - ZETA**j) for j in range(3)) < 0.2:
            rec.events.append((k, ROOT_PROXIMITY))
        if abs(z) > stop_radius:
            rec.events.append((k, ESCAPE))
            return rec
    rec.truncated = True
    return rec


def classify_mcmullen(p, max_iter=200):
    """Escape-trichotomy class of z^n + lambda/z^d from one critical orbit.

    Rotational symmetry makes the critical point choice immaterial; the
    principal one is used.  Trap-door membership at the ejection step is the
    pole-term-dominance proxy |z| < |lambda|^(1/(n+d)).
    """
    M = build_mcmullen(p)
    R = escape_radius(p)
    trap = abs(p.lam) ** (1.0 / (p.n + p.d))
    thresholds = {"escape_radius": R, "trap_radius": trap}
    par = {"family": "mcmullen", "n": p.n, "d": p.d, "lambda": p.lam}
    z = mcmullen_critical_points(p)[0]
    rec = OrbitRecord(points=[z])
    e = None
    for k in range(1, max_iter + 1):
        z = M(z)
        if z is INF:
            z = complex("inf")
        rec.points.append(z)
        if abs(z) > R:
            e = k
            rec.events.append((k, ESCAPE))
            break
    else:
        rec.truncated = True
    if e is None:
        return TrichotomyReport(JuliaClass.UNRESOLVED, None, rec, thresholds, params=par)
    if e == 1:
        return TrichotomyReport(JuliaClass.CANTOR, None, rec, thresholds, params=par)
    q = e - 1
    zq = abs(rec.points[q])
    boundary = abs(zq - trap) < BOUNDARY_SLACK * trap
    if zq < trap:
        rec.events.insert(0, (q, POLE_PASSAGE))
        if q == 1:
            return TrichotomyReport(JuliaClass.CANTOR_CIRCLES, 2, rec, thresholds, boundary, par)
        return TrichotomyReport(JuliaClass.SIERPINSKI, q + 1, rec, thresholds, boundary, par)
    return TrichotomyReport(JuliaClass.CANTOR, None, rec, thresholds, boundary, par)


def classify_ra(a, max_iter=200):
    """Trichotomy class of the root-finding map at small parameter a.

    Follows the orbit of a critical value under the second iterate.  The
    intermediate point y_k of each doubled step is tested for pole ejection
    (|y_k| past max(20, |a|^(-1/3))); the orbit point itself for capture by a
    root of unity (distance < 0.2).  Only validated for |a| < 0.1.
    """
    a = complex(a)
    if a == 0:
        raise DegenerateParameter("a = 0 is the singular parameter")
    if abs(a) >= 0.1:
        raise ParameterTooLarge("classification proxies unvalidated for |a| >= 0.1")
    ra = build_ra(a)
    pole_thresh = max(20.0, abs(a) ** (-1.0 / 3.0))
    thresholds = {"pole_threshold": pole_thresh, "root_radius": 0.2}
    par = {"family": "ch", "a": a}
    z = critical_values_ra(a, ra=ra)[0]
    rec = OrbitRecord(points=[z])
    boundary = False
    for k in range(1, max_iter + 1):
        d_root = min(abs(z - ZETA**j) for j in range(3))
        if d_root < 0.2:
            rec.events.append((k, ROOT_PROXIMITY))
            boundary = abs(d_root - 0.2) < BOUNDARY_SLACK * 0.2
            return TrichotomyReport(JuliaClass.CANTOR, None, rec, thresholds, boundary, par)
        y = ra(z)
        ymod = float("inf") if y is INF else abs(y)
        if ymod > pole_thresh:
            rec.events.append((k, POLE_PASSAGE))
            boundary = ymod != float("inf") and abs(ymod - pole_thresh) < BOUNDARY_SLACK * pole_thresh
            if k == 1:
                return TrichotomyReport(JuliaClass.CANTOR_CIRCLES, 2, rec, thresholds, boundary, par)
            return TrichotomyReport(JuliaClass.SIERPINSKI, k + 1, rec, thresholds, boundary, par)
        z = ra(y)
        if z is INF:
            rec.truncated = True
            break
        rec.points.append(z)
    rec.truncated = True
    return TrichotomyReport(JuliaClass.UNRESOLVED, None, rec, thresholds, params=par)
