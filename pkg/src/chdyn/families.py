"""Construction of the map families and their closed-form critical data.

The central family is the degree-6 rational map obtained by applying the
third-order (Chebyshev-Halley type) iteration with method parameter alpha to
z^3 - 1, written in the parameter a = 5 - 4*alpha:

    R_a(z) = (2a z^6 + (15-a) z^3 + (3-a)) / (3 z^2 (5-a + (1+a) z^3)).

Also provided: the degree-2n generalization for z^n - 1 and the singularly
perturbed power maps z^n + lambda / z^d.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateParameter,
    DerivativeVanishes,
    HalleyDenominatorVanishes,
    LambdaZero,
)
from .rational import INF, Polynomial, RationalMap

ZETA = complex(np.exp(2j * np.pi / 3))


@dataclass(frozen=True)
class CHParams:
    """Parameters of the root-finding family; a and alpha are linked by a = 5 - 4*alpha."""

    a: complex
    alpha: complex
    n: int = 3

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n >= 2 required")
        if self.a != 5 - 4 * self.alpha:
            raise ValueError("a and alpha must satisfy a = 5 - 4*alpha")

    @classmethod
    def from_a(cls, a, n=3):
        return cls(a=complex(a), alpha=(5 - complex(a)) / 4, n=n)

    @classmethod
    def from_alpha(cls, alpha, n=3):
        return cls(a=5 - 4 * complex(alpha), alpha=complex(alpha), n=n)


@dataclass(frozen=True)
class McMullenParams:
    """Parameters (n, d, lambda) of the perturbed power map z^n + lambda/z^d."""

    n: int
    d: int
    lam: complex

    def __post_init__(self):
        if self.lam == 0:
            raise LambdaZero("lambda must be nonzero")
        if self.n < 2 or self.d < 1:
            raise ValueError("need n >= 2 and d >= 1")


@dataclass
class CriticalData:
    critical_points: list = field(default_factory=list)
    critical_values: list = field(default_factory=list)
    fixed_points: list = field(default_factory=list)


def alpha_a_convert(x, to="a"):
    """Convert alpha -> a (to='a') or a -> alpha (to='alpha')."""
    if to == "a":
        return 5 - 4 * x
    if to == "alpha":
        return (5 - x) / 4
    raise ValueError("direction must be 'a' or 'alpha'")


def ch_step(f, alpha, z):
    """One step of the third-order iteration for f at z.

    z - (1 + L/(2(1 - alpha*L))) * f(z)/f'(z)  with  L = f f'' / f'^2.
    """
    fp = f.deriv()
    fpp = fp.deriv()
    fpz = fp(z)
    if fpz == 0:
        raise DerivativeVanishes(f"f'({z}) = 0")
    L = f(z) * fpp(z) / fpz**2
    halley = 1 - alpha * L
    if halley == 0:
        raise HalleyDenominatorVanishes(f"1 - alpha*L = 0 at {z}")
    return z - (1 + L / (2 * halley)) * f(z) / fpz


def build_ra(a):
    """The degree-6 family member at parameter a (degree 5 at a=0, 4 at a=3)."""
    a = complex(a)
    num = Polynomial([3 - a, 0, 0, 15 - a, 0, 0, 2 * a])
    den = Polynomial([0, 0, 3 * (5 - a), 0, 0, 3 * (1 + a)])
    return RationalMap(num, den)


def build_on_alpha(n, alpha):
    """Degree-2n map of the third-order iteration applied to z^n - 1.

    Built from the expanded coefficient form; for n = 3 it coincides with
    build_ra(5 - 4*alpha) pointwise.
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    al = complex(alpha)
    num = np.zeros(2 * n + 1, dtype=complex)
    num[0] = (1 - 2 * al) * (n - 1)
    num[n] = 2 - 4 * al - 4 * n + 6 * al * n - 2 * al * n**2
    num[2 * n] = (n - 1) * (1 - 2 * al - 2 * n + 2 * al * n)
    den = np.zeros(2 * n, dtype=complex)
    den[n - 1] = 2 * n * al * (1 - n)
    den[2 * n - 1] = 2 * n * (-al - n + al * n)
    return RationalMap(Polynomial(num), Polynomial(den))


def build_mcmullen(p):
    """The map z^n + lambda/z^d as a quotient (z^(n+d) + lambda) / z^d."""
    num = np.zeros(p.n + p.d + 1, dtype=complex)
    num[0] = p.lam
    num[-1] = 1.0
    den = np.zeros(p.d + 1, dtype=complex)
    den[-1] = 1.0
    return RationalMap(Polynomial(num), Polynomial(den))


def critical_points_ra(a):
    """The three free critical points zeta^j * ((15 - 8a + a^2)/(a(a+1)))^(1/3).

    Principal cube root; undefined at a in {0, -1, 3}.
    """
    a = complex(a)
    if a in (0, -1, 3):
        raise DegenerateParameter(f"critical points undefined at a = {a}")
    base = ((15 - 8 * a + a**2) / (a * (a + 1))) ** (1 / 3)
    return [ZETA**j * base for j in range(3)]


def critical_values_ra(a, ra=None):
    """The three critical values, cube-root branch pinned so v_j = R_a(c_j).

    The printed closed form leaves the cube root free up to a factor zeta^k;
    the dynamical identity is the ground truth, so the branch is fixed by
    direct evaluation at the first critical point.
    """
    a = complex(a)
    if a in (0, -1, 3, 5):
        raise DegenerateParameter(f"critical values undefined at a = {a}")
    pref = (25 - 6 * a + a**2) / ((a - 5) ** 2 * (a + 1))
    root = (a**2 * (15 - 8 * a + a**2) / (a + 1)) ** (1 / 3)
    if ra is None:
        ra = build_ra(a)
    cps = critical_points_ra(a)
    target = ra(cps[0])
    best = min(range(3), key=lambda k: abs(pref * root * ZETA**k - target))
    branch = ZETA**best
    return [ZETA**j * pref * root * branch for j in range(3)]


def _cbrt_real_branch(w):
    """Cube root with the real branch: cbrt(-1) = -1."""
    w = complex(w)
    if w.real < 0:
        return -((-w) ** (1 / 3))
    return w ** (1 / 3)


def fixed_points_ra(a, residual_tol=1e-9):
    """Fixed points of R_a: the three zeta^j * ((a-3)/(a+3))^(1/3), the roots of
    unity, and infinity.  Cube root on the branch with cbrt(-1) = -1."""
    a = complex(a)
    if abs(a + 3) == 0:
        raise DegenerateParameter("fixed points undefined at a = -3")
    base = _cbrt_real_branch((a - 3) / (a + 3))
    extra = [ZETA**j * base for j in range(3)]
    ra = build_ra(a)
    for x in extra:
        fx = ra(x)
        if fx is INF or abs(fx - x) > residual_tol * (1 + abs(x)):
            raise DegenerateParameter(f"fixed point formula fails at a = {a}")
    roots_of_unity = [ZETA**j for j in range(3)]
    return CriticalData(fixed_points=extra + roots_of_unity + [INF])


def mcmullen_critical_points(p):
    """The n+d free critical points: all solutions of z^(n+d) = d*lambda/n."""
    m = p.n + p.d
    base = (p.d * p.lam / p.n) ** (1.0 / m)
    rot = complex(np.exp(2j * np.pi / m))
    return [base * rot**k for k in range(m)]


def critical_data_ra(a):
    """Bundle of critical points, values, and fixed points at parameter a."""
    ra = build_ra(a)
    cps = critical_points_ra(a)
    cvs = critical_values_ra(a, ra=ra)
    return CriticalData(
        critical_points=cps,
        critical_values=cvs,
        fixed_points=fixed_points_ra(a).fixed_points,
    )
