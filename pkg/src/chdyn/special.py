"""Distinguished real parameters of the root-finding family.

On the negative real axis near 0 the family carries three landmarks: the
period-two cycle {q0, q_inf} of the map on the positive reals, the parameter
a_q where the (real, positive) critical value collides with q0, and the
parameter a_star where the second iterate of the critical value hits the
origin exactly.  All searches are restricted to the real axis.
"""

from dataclasses import dataclass

from .errors import CycleNotFound, NoSignChange
from .families import build_ra
from .rational import INF

BIG = 1e12


@dataclass(frozen=True)
class RealBracket:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("need lo < hi")

    @classmethod
    def checked(cls, g, lo, hi):
        """Bracket that verifies the sign change of g at construction."""
        b = cls(lo, hi)
        if g(lo) * g(hi) > 0:
            raise NoSignChange(f"no sign change of target on [{lo}, {hi}]")
        return b


@dataclass
class SpecialParamResult:
    value: float
    residual: float
    iterations: int
    kind: str


def real_root_bisect(g, bracket, tol=1e-12, kind="root", max_iter=200):
    """Bracketed root of a real function: bisection with one secant
    acceleration step per iteration (secant point discarded if it leaves the
    bracket).  Stops at |g| <= tol or bracket width <= 1e-14."""
    lo, hi = bracket.lo, bracket.hi
    flo, fhi = g(lo), g(hi)
    if flo == 0:
        return SpecialParamResult(lo, 0.0, 0, kind)
    if fhi == 0:
        return SpecialParamResult(hi, 0.0, 0, kind)
    if flo * fhi > 0:
        raise NoSignChange(f"no sign change on [{lo}, {hi}]")
    it = 0
    best, fbest = (lo, flo) if abs(flo) < abs(fhi) else (hi, fhi)
    while abs(fbest) > tol and hi - lo > 1e-14 and it < max_iter:
        it += 1
        mid = 0.5 * (lo + hi)
        fmid = g(mid)
        if abs(fmid) < abs(fbest):
            best, fbest = mid, fmid
        if flo * fmid <= 0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
        if fhi != flo:
            x = hi - fhi * (hi - lo) / (fhi - flo)
            if lo < x < hi:
                fx = g(x)
                if abs(fx) < abs(fbest):
                    best, fbest = x, fx
                if flo * fx <= 0:
                    hi, fhi = x, fx
                else:
                    lo, flo = x, fx
    return SpecialParamResult(best, abs(fbest), it, kind)


def _real_eval(ra, x):
    """R_a at a real point, as a real number; poles map to +/-BIG."""
    v = ra(complex(x))
    if v is INF:
        return BIG
    return v.real


def real_critical_value(a):
    """The real positive critical value for real a in (-1, 0)."""
    if not -1 < a < 0:
        raise ValueError("real critical value defined for a in (-1, 0)")
    pref = (25 - 6 * a + a * a) / ((a - 5) ** 2 * (a + 1))
    arg = a * a * (15 - 8 * a + a * a) / (a + 1)
    return pref * arg ** (1.0 / 3.0)


def q0_cycle(a, bracket=None, tol=1e-12):
    """The period-two cycle {q0, q_inf} on the positive reals, 0 < q0 < 1 < q_inf.

    q0 is found by bracketed root solving of R_a^2(x) - x; the seed bracket
    (0.05, 0.5) excludes the fixed point x = 1.
    """
    ra = build_ra(a)

    def g(x):
        return _real_eval(ra, _real_eval(ra, x)) - x

    if bracket is None:
        bracket = RealBracket(0.05, 0.5)
    if g(bracket.lo) * g(bracket.hi) > 0:
        raise CycleNotFound(f"no 2-cycle bracketed in ({bracket.lo}, {bracket.hi}) at a = {a}")
    res = real_root_bisect(g, bracket, tol=tol, kind="q0")
    q0 = res.value
    q_inf = _real_eval(ra, q0)
    if abs(q_inf - q0) < 1e-6 or not q_inf > 1:
        raise CycleNotFound(f"solution at a = {a} is not a genuine 2-cycle")
    return q0, q_inf


def find_a_q(bracket=None, tol=1e-12):
    """Parameter where the real critical value meets q0: root of v(a) - q0(a)."""
    if bracket is None:
        bracket = RealBracket(-0.028, -0.0164)

    def g(a):
        return real_critical_value(a) - q0_cycle(a)[0]

    return real_root_bisect(g, bracket, tol=tol, kind="a_q")


def find_a_star(bracket=None, tol=1e-12):
    """Parameter where the second iterate of the critical value vanishes:
    root of R_a^2(v(a)) on (a_q, 0)."""
    if bracket is None:
        aq = find_a_q().value
        bracket = RealBracket(aq + 1e-6, -0.005)

    def h(a):
        ra = build_ra(a)
        return _real_eval(ra, _real_eval(ra, real_critical_value(a)))

    return real_root_bisect(h, bracket, tol=tol, kind="a_star")
