"""Sampling-based verification of the quantitative estimates.

Each check draws a deterministic sample set (explicit seed, default 0),
evaluates the relevant inequality or identity, and reports the worst ratio
together with a witness point on failure.  These are numerical supports /
falsifiers, not proofs.
"""

import cmath
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateDelta, NotMcMullenForm, ParameterTooLarge
from .families import ZETA, build_ra
from .rational import Polynomial

# 1 + max over 1 <= |b| <= 3 of |(15 + 2 b^3) / (3 b^2)|; the max is 17/3 at |b| = 1
C1 = 1.0 + 17.0 / 3.0


@dataclass
class LemmaCheckResult:
    lemma_id: str
    samples: int
    worst_ratio: float
    passed: bool
    witness: complex | None = None
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class NormalizeInput:
    """Quotient (a6 z^6 + b3 z^3 + l0) / z^2."""

    a6: complex
    b3: complex
    l0: complex

    def __post_init__(self):
        if self.a6 == 0 or self.l0 == 0:
            raise ValueError("need a6 != 0 and l0 != 0")


def _poles(F):
    if F.den.degree < 1:
        return np.array([], dtype=complex)
    return np.roots(F.den.coeffs[::-1])


def check_symmetry(a, samples=1000, seed=0):
    """Max normalized violation of R_a(zeta z) = zeta R_a(z) over random z."""
    rng = np.random.default_rng(seed)
    ra = build_ra(a)
    poles = _poles(ra)
    mod = np.exp(rng.uniform(np.log(0.1), np.log(10.0), samples))
    ang = rng.uniform(0.0, 2.0 * np.pi, samples)
    z = mod * np.exp(1j * ang)
    if len(poles):
        near = np.min(np.abs(z[:, None] - poles[None, :]), axis=1) < 1e-3
        near |= np.min(np.abs((ZETA * z)[:, None] - poles[None, :]), axis=1) < 1e-3
        z = z[~near]
    fz = ra.eval_grid(z)
    frz = ra.eval_grid(ZETA * z)
    ratio = np.abs(frz - ZETA * fz) / (1.0 + np.abs(fz))
    ok = np.isfinite(ratio)
    ratio, z = ratio[ok], z[ok]
    i = int(np.argmax(ratio))
    worst = float(ratio[i])
    return LemmaCheckResult(
        "symmetry", len(z), worst, worst < 1e-12,
        witness=None if worst < 1e-12 else complex(z[i]),
    )


def check_annulus_bound(a, samples=10000, seed=0):
    """Image size on the annulus |z| in (|a|^(-1/3), 3|a|^(-1/3)).

    Checks |R_a(z)| < C1 |a|^(2/3) and the leading-order magnitude
    |(15 + 2 b^3)/(3 b^2)| |a|^(2/3) to relative error 0.05.
    """
    a = complex(a)
    if a == 0 or abs(a) > 1e-3:
        raise ParameterTooLarge("annulus bound checked for 0 < |a| <= 1e-3")
    rng = np.random.default_rng(seed)
    ra = build_ra(a)
    w = a ** (1 / 3)
    b = np.exp(rng.uniform(0.0, np.log(3.0), samples)) * np.exp(
        1j * rng.uniform(0.0, 2.0 * np.pi, samples)
    )
    z = b / w
    fz = np.abs(ra.eval_grid(z))
    scale = abs(a) ** (2.0 / 3.0)
    bound_ratio = fz / (C1 * scale)
    lead = np.abs((15 + 2 * b**3) / (3 * b**2)) * scale
    rel_err = np.abs(fz - lead) / scale
    worst = float(np.max(bound_ratio))
    worst_rel = float(np.max(rel_err))
    passed = worst < 1.0 and worst_rel < 0.05
    i = int(np.argmax(bound_ratio if worst >= 1.0 else rel_err))
    return LemmaCheckResult(
        "annulus-bound", samples, worst, passed,
        witness=None if passed else complex(z[i]),
        details={"C1": C1, "leading_order_rel_err": worst_rel},
    )


def check_small_disk_bound(a, C=0.1, samples=10000, seed=0):
    """Second-iterate expulsion from the small disk |z| < C |a|^(2/3).

    Passes iff min |R_a^2(z)| > |a|^(-1/3); the constant 1 on the right is
    only claimed for C <= 0.1, larger C is rejected.
    """
    a = complex(a)
    if a == 0 or abs(a) > 1e-3:
        raise ParameterTooLarge("small-disk bound checked for 0 < |a| <= 1e-3")
    if C > 0.1:
        raise ValueError("expulsion constant is only calibrated for C <= 0.1")
    rng = np.random.default_rng(seed)
    ra = build_ra(a)
    r = C * abs(a) ** (2.0 / 3.0) * rng.uniform(1e-6, 1.0, samples)
    z = r * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, samples))
    f2 = np.abs(ra.eval_grid(ra.eval_grid(z)))
    ratio = f2 * abs(a) ** (1.0 / 3.0)
    i = int(np.argmin(ratio))
    worst = float(ratio[i])
    return LemmaCheckResult(
        "small-disk-bound", samples, worst, worst > 1.0,
        witness=None if worst > 1.0 else complex(z[i]),
        details={"C": C, "C_prime": 1.0},
    )


def mcmullen_normalize(q):
    """Conjugacy invariant lambda of (a6 z^6 + b3 z^3 + l0)/z^2.

    Rescaling z -> z / cbrt(a6) leaves the cubic coefficient alone and sends
    the constant to a6*l0, so lambda = a6*l0.  A nonzero cubic term means the
    map has fewer than 3 distinct critical values and is rejected; so is a
    vanishing discriminant sqrt(b^2 + 32 lambda).
    """
    lam = q.a6 * q.l0
    if abs(q.b3) > 1e-10 * (1.0 + abs(lam)):
        raise NotMcMullenForm("nonzero z^3 coefficient after normalization")
    delta = cmath.sqrt(q.b3**2 + 32 * lam)
    if delta == 0:
        raise DegenerateDelta("b^2 + 32 lambda = 0: critical points collide")
    w_plus = (-q.b3 + delta) / 8
    w_minus = (-q.b3 - delta) / 8
    prod_err = abs(w_plus * w_minus + lam / 2) / (1.0 + abs(lam))
    if prod_err > 1e-12:
        raise DegenerateDelta("critical product identity w+ w- = -lambda/2 violated")
    return lam


def check_uniform_convergence(a, radius=3.0, grid_n=101):
    """Max of |R_a - R_0| on |z| <= radius against the linear-in-a bound.

    The slope K comes from the exact rewriting
    R_a = (N0 + a P)/(D0 + a Q) with N0 = 15 z^3 + 3, D0 = 3 z^2 (z^3 + 5),
    P = (z^3 - 1)(2 z^3 + 1), Q = 3 z^2 (z^3 - 1); K is evaluated on the same
    grid and reported, not hard-coded.
    """
    a = complex(a)
    if abs(a) > 1e-2:
        raise ParameterTooLarge("convergence check limited to |a| <= 1e-2")
    ra = build_ra(a)
    r0 = build_ra(0.0)
    xs = np.linspace(-radius, radius, grid_n)
    z = (xs[None, :] + 1j * xs[:, None]).ravel()
    z = z[np.abs(z) <= radius]
    poles0 = _poles(r0)
    z = z[np.min(np.abs(z[:, None] - poles0[None, :]), axis=1) >= 0.05]

    n0 = Polynomial([3, 0, 0, 15])
    d0 = Polynomial([0, 0, 15, 0, 0, 3])
    p = Polynomial([-1, 0, 0, -1, 0, 0, 2])  # (z^3 - 1)(2 z^3 + 1)
    qq = Polynomial([0, 0, -3, 0, 0, 3])  # 3 z^2 (z^3 - 1)
    d0v = d0.eval_grid(z)
    margin = np.abs(d0v) - abs(a) * np.abs(qq.eval_grid(z))
    margin = np.maximum(margin, 1e-12)
    K = float(np.max(np.abs(p.eval_grid(z) * d0v - n0.eval_grid(z) * qq.eval_grid(z))
                     / (np.abs(d0v) * margin)))

    diff = np.abs(ra.eval_grid(z) - r0.eval_grid(z))
    i = int(np.argmax(diff))
    worst = float(diff[i])
    bound = K * abs(a)
    passed = worst <= bound or a == 0
    return LemmaCheckResult(
        "uniform-convergence", len(z), worst, passed,
        witness=None if passed else complex(z[i]),
        details={"K": K, "bound": bound},
    )


def check_normalize_roundtrip(cases=100, seed=0):
    """Round-trip of the conjugacy invariant over random rescalings.

    Draws lambda != 0 and a cube root u of a random leading coefficient,
    expands u * M_lambda(z/u) back into quotient form, and checks both that
    the expansion matches pointwise and that normalization recovers lambda.
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    witness = None
    for _ in range(cases):
        lam = complex(rng.normal(), rng.normal())
        if abs(lam) < 1e-3:
            lam += 1.0
        u = complex(rng.normal(), rng.normal())
        if abs(u) < 1e-3:
            u += 1.0
        a6 = 1.0 / u**3
        l0 = lam * u**3
        # pointwise oracle: u*M(z/u) against the expanded quotient
        for _ in range(5):
            z = complex(rng.normal(), rng.normal())
            if abs(z) < 1e-2:
                z += 0.5
            g = u * ((z / u) ** 4 + lam / (z / u) ** 2)
            q = (a6 * z**6 + l0) / z**2
            err = abs(g - q) / (1.0 + abs(g))
            if err > worst:
                worst, witness = err, z
        lam_back = mcmullen_normalize(NormalizeInput(a6, 0.0, l0))
        err = abs(lam_back - lam) / abs(lam)
        if err > worst:
            worst, witness = err, lam
    passed = worst < 1e-12
    return LemmaCheckResult(
        "normalize-roundtrip", cases, worst, passed,
        witness=None if passed else witness,
    )
