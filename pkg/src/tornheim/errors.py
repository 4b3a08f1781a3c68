"""Typed failures raised by the evaluators.

Every analytic routine either returns a finite value with an error estimate
or raises one of these. The CLI maps them to ``status=refused`` records.
"""


class TornheimError(ArithmeticError):
    """Base class for all refusals and numerical failures."""


class PoleError(TornheimError):
    """Argument sits (numerically) on a pole."""


class DomainError(TornheimError, ValueError):
    """Argument outside the domain where the routine is defined."""


class OutOfDomain(DomainError):
    """Point outside the region of absolute convergence of the double series."""


class SingularPoint(TornheimError):
    """Point lies on, or too close to, a singular hyperplane."""


class NearSingularDenominator(TornheimError):
    """A determinant or normalising factor is too close to zero."""


class NonConvergence(TornheimError):
    """Quadrature or series failed to reach its tolerance."""


class TailDivergence(NonConvergence):
    """Integrand does not decay along the contour."""


class SlowConvergence(NonConvergence):
    """Truncated series tail exceeds the requested tolerance."""


class ContourPinch(TornheimError):
    """Poles that must lie on opposite sides of a contour collide."""


class NoAdmissibleK(DomainError):
    """No shift index satisfies the strip inequalities."""


class ParityViolation(DomainError):
    """Integer triple does not have odd weight."""


class ParityError(DomainError):
    """Integer argument has the wrong parity for the requested formula."""


class UnsupportedOrder(DomainError):
    """Derivative order not implemented."""


class InsufficientOrder(DomainError):
    """Formal series truncated too early for an exact coefficient."""
