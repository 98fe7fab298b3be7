"""Polynomials and rational maps on the Riemann sphere.

Coefficient vectors are stored in ascending degree order.  Evaluation of a
rational map switches to the w = 1/z chart for |z| > 1 so that orbits passing
near infinity never overflow.  The Aberth-Ehrlich simultaneous iteration in
``find_roots`` is the brute-force root oracle used to cross-check every
closed-form critical/fixed point formula elsewhere in the package.
"""

import numpy as np

from .errors import NoConvergence, NotFixed


class _Infinity:
    """Distinguished point at infinity; compares equal only to itself."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"


INF = _Infinity()


class Polynomial:
    """Complex polynomial with ascending coefficients; empty list is the zero polynomial."""

    def __init__(self, coeffs):
        c = np.asarray(coeffs, dtype=complex).ravel()
        # trim exact zeros on the high-degree end so degree == len - 1
        n = len(c)
        while n > 0 and c[n - 1] == 0:
            n -= 1
        self.coeffs = c[:n].copy()
        self._ctup = tuple(complex(x) for x in self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return len(self.coeffs) == 0

    def __call__(self, z):
        """Horner evaluation at a scalar (python complex fast path)."""
        acc = 0j
        for c in reversed(self._ctup):
            acc = acc * z + c
        return acc

    def eval_grid(self, z):
        """Horner evaluation on a numpy array."""
        acc = np.zeros_like(z, dtype=complex)
        for c in reversed(self._ctup):
            acc = acc * z + c
        return acc

    def deriv(self):
        if self.degree < 1:
            return Polynomial([])
        k = np.arange(1, len(self.coeffs))
        return Polynomial(self.coeffs[1:] * k)

    def reversed(self):
        """Coefficients read backwards: p(z) = z^deg * reversed(1/z)."""
        return Polynomial(self.coeffs[::-1])

    def shift(self, k):
        """Multiply by z^k."""
        if self.is_zero():
            return Polynomial([])
        return Polynomial(np.concatenate([np.zeros(k, dtype=complex), self.coeffs]))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial([])
            return Polynomial(np.convolve(self.coeffs, other.coeffs))
        return Polynomial(self.coeffs * other)

    __rmul__ = __mul__

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = np.zeros(n, dtype=complex)
        out[: len(a)] += a
        out[: len(b)] += b
        return Polynomial(out)

    def __sub__(self, other):
        return self + (other * (-1))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"


def poly_eval(p, z):
    """Evaluate p at z (Horner)."""
    return p(z)


def _backward_scale(p, z, tol):
    """Residual tolerance tol * (1 + sum_k |c_k| |z|^k) at each point.

    A residual below this bound certifies z as an exact root of a polynomial
    whose coefficients differ relatively by O(tol); a plain absolute bound is
    unreachable in double precision once roots are large (the residual of a
    correctly rounded root grows like |p'| ~ |lead| * |root|^(deg-1)).
    """
    az = np.abs(z)
    acc = np.zeros_like(az)
    for c in reversed(p._ctup):
        acc = acc * az + abs(c)
    return tol * (1.0 + acc)


def find_roots(p, tol=1e-10, max_sweeps=200):
    """All complex roots of p with multiplicity, by Aberth-Ehrlich iteration.

    Starts from equispaced points on a circle of radius
    1 + max|c_k / c_lead| and sweeps at most ``max_sweeps`` times.  Raises
    NoConvergence if some residual |p(root)| stays above the backward-error
    tolerance tol * (1 + sum_k |c_k| |root|^k).
    """
    if p.degree < 1:
        raise ValueError("find_roots needs degree >= 1")

    # factor out exact roots at the origin first
    c = p.coeffs
    nzero = 0
    while c[nzero] == 0:
        nzero += 1
    q = Polynomial(c[nzero:])
    zeros = [0j] * nzero
    if q.degree == 0:
        return zeros

    qc = q.coeffs
    n = q.degree
    radius = 1.0 + float(np.max(np.abs(qc[:-1] / qc[-1]))) if n > 0 else 1.0
    angles = 2.0 * np.pi * (np.arange(n) + 0.25) / n + 0.35
    z = radius * np.exp(1j * angles)

    dq = q.deriv()
    for _ in range(max_sweeps):
        pv = q.eval_grid(z)
        if np.all(np.abs(pv) <= _backward_scale(q, z, tol)):
            break
        dv = dq.eval_grid(z)
        # Newton ratio; nudge exact critical collisions off the stationary point
        bad = dv == 0
        if np.any(bad):
            z = np.where(bad, z * (1 + 1e-8) + 1e-8, z)
            pv = q.eval_grid(z)
            dv = dq.eval_grid(z)
        w = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        s = np.sum(1.0 / diff, axis=1) - 1.0  # remove the diagonal 1/1 term
        denom = 1.0 - w * s
        denom = np.where(denom == 0, 1e-300, denom)
        z = z - w / denom
    else:
        if not np.all(np.abs(q.eval_grid(z)) <= _backward_scale(q, z, tol)):
            raise NoConvergence("Aberth-Ehrlich did not reach tolerance")

    roots = zeros + [complex(r) for r in z]
    resid = np.abs([p(r) for r in roots])
    if np.any(resid > _backward_scale(p, np.array(roots), tol)):
        raise NoConvergence("root residual above tolerance")
    return roots


def _match_and_cancel(num, den, tol):
    """Cancel common roots of num and den (distance < tol); returns reduced pair."""
    if num.degree < 1 or den.degree < 1:
        return num, den
    rn = list(np.roots(num.coeffs[::-1]))
    rd = list(np.roots(den.coeffs[::-1]))
    matched = []
    for r in rn:
        for k, s in enumerate(rd):
            if abs(r - s) < tol:
                matched.append((r, k))
                del rd[k]
                break
    if not matched:
        return num, den
    keep_n = list(rn)
    for r, _ in matched:
        keep_n.remove(r)
    lead_n = num.coeffs[-1]
    lead_d = den.coeffs[-1]
    new_num = Polynomial(np.poly(keep_n)[::-1] * lead_n) if keep_n else Polynomial([lead_n])
    new_den = Polynomial(np.poly(rd)[::-1] * lead_d) if rd else Polynomial([lead_d])
    return new_num, new_den


class RationalMap:
    """Quotient num/den, total on the sphere.

    Common roots of num and den (within ``cancel_tol``) are cancelled at
    construction, so e.g. the degree of the third-order iteration map drops
    from 6 to 5 or 4 at its two degenerate parameters without special-casing.
    """

    def __init__(self, num, den, cancel_tol=1e-10):
        if not isinstance(num, Polynomial):
            num = Polynomial(num)
        if not isinstance(den, Polynomial):
            den = Polynomial(den)
        if den.is_zero():
            raise ValueError("denominator is the zero polynomial")
        num, den = _match_and_cancel(num, den, cancel_tol)
        self.num = num
        self.den = den
        self._rev_num = num.reversed()
        self._rev_den = den.reversed()

    @property
    def degree(self):
        return max(self.num.degree, self.den.degree)

    def __call__(self, z):
        """Evaluate at a point of the sphere (complex scalar or INF)."""
        if z is INF:
            return self._at_infinity()
        if abs(z) <= 1.0:
            dv = self.den(z)
            if dv == 0:
                return INF
            return self.num(z) / dv
        w = 1.0 / z
        rn = self._rev_num(w)
        rd = self._rev_den(w)
        if rd == 0:
            return INF
        k = self.den.degree - self.num.degree
        return (rn / rd) * w**k

    def _at_infinity(self):
        dn, dd = self.num.degree, self.den.degree
        if dn > dd:
            return INF
        if dn == dd:
            return self.num.coeffs[-1] / self.den.coeffs[-1]
        return 0j

    def eval_grid(self, z):
        """Vectorized evaluation on finite numpy grids; poles give inf/nan."""
        near = np.abs(z) <= 1.0
        out = np.empty_like(z, dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            zn = np.where(near, z, 1.0)
            out_n = self.num.eval_grid(zn) / self.den.eval_grid(zn)
            w = np.where(near, 1.0, 1.0 / np.where(z == 0, 1.0, z))
            k = self.den.degree - self.num.degree
            out_f = (self._rev_num.eval_grid(w) / self._rev_den.eval_grid(w)) * w**k
            out = np.where(near, out_n, out_f)
        return out

    def deriv_at(self, z):
        """Derivative at a finite point, via the quotient rule in the right chart."""
        n, d = self.num, self.den
        dn_p, dd_p = n.deriv(), d.deriv()
        if abs(z) <= 1.0:
            dv = d(z)
            return (dn_p(z) * dv - n(z) * dd_p(z)) / dv**2
        w = 1.0 / z
        a = self._rev_num(w)
        b = self._rev_den(w)
        a2 = dn_p.reversed()(w)
        b2 = dd_p.reversed()(w)
        return z ** (n.degree - d.degree - 1) * (a2 * b - a * b2) / b**2

    def derivative_numerator(self):
        """Numerator polynomial of the derivative: num' * den - num * den'."""
        return self.num.deriv() * self.den - self.num * self.den.deriv()

    def fixed_point_numerator(self):
        """Numerator polynomial of F(z) - z: num - z * den."""
        return self.num - self.den.shift(1)

    def __repr__(self):
        return f"RationalMap(deg {self.num.degree}/{self.den.degree})"


def ratmap_eval(F, z):
    """Evaluate F at any point of the sphere (complex or INF)."""
    return F(z)


def multiplier_at(F, z, residual_tol=1e-8):
    """Derivative of F at a fixed point z; at INF, the derivative of 1/F(1/w) at 0."""
    if z is INF:
        if F(INF) is not INF:
            raise NotFixed("infinity is not fixed")
        k = F.num.degree - F.den.degree  # > 0 since F(INF) = INF
        g_num = F._rev_den.shift(k)  # g(w) = 1/F(1/w) = w^k rev_den(w)/rev_num(w)
        g_den = F._rev_num
        gd0 = g_den(0j)
        return (g_num.deriv()(0j) * gd0 - g_num(0j) * g_den.deriv()(0j)) / gd0**2
    fz = F(z)
    if fz is INF or abs(fz - z) > residual_tol * (1.0 + abs(z)):
        raise NotFixed(f"{z} is not a fixed point")
    return F.deriv_at(z)
