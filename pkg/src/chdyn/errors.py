"""Typed domain errors shared across the package."""


class ChdynError(Exception):
    """Base class for all domain errors."""


class NotFixed(ChdynError):
    """The supplied point is not a fixed point of the map."""


class NoConvergence(ChdynError):
    """Iterative solver failed to reach the requested tolerance."""


class DerivativeVanishes(ChdynError):
    """f'(z) = 0 where the iteration formula needs to divide by it."""


class HalleyDenominatorVanishes(ChdynError):
    """1 - alpha * L_f(z) = 0 in the third-order iteration step."""


class DegenerateParameter(ChdynError):
    """Closed-form formula undefined at this family parameter."""


class LambdaZero(ChdynError):
    """The perturbation coefficient lambda must be nonzero."""


class NoSignChange(ChdynError):
    """Bracket endpoints do not straddle a root."""


class CycleNotFound(ChdynError):
    """No period-two cycle detected in the search interval."""


class ParameterTooLarge(ChdynError):
    """Asymptotic check only valid for small |a|."""


class NotMcMullenForm(ChdynError):
    """Quotient has a nonzero cubic term, so it is not conjugate to z^4 + lambda/z^2."""


class DegenerateDelta(ChdynError):
    """Discriminant sqrt(b^2 + 32*lambda) vanishes; critical points collide."""
