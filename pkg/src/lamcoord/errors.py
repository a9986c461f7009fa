"""Exception hierarchy for the lamcoord package.

All domain failures derive from :class:`LamcoordError` so callers can catch
one base class.  Errors carry enough structure (region kind, 1-based arc
indices) for the CLI to print messages that can be checked against the
standard labelling of the arc system: arcs and regions are always reported
with their 1-based indices.
"""

from __future__ import annotations


class LamcoordError(Exception):
    """Base class for all lamcoord domain errors."""


class SignatureError(LamcoordError, ValueError):
    """Invalid surface signature: k < 1, n < 1, or n + k < 3."""


class CoordinateLengthError(LamcoordError, ValueError):
    """A coordinate vector's length does not match the surface signature."""


class InvalidCoordinatesError(LamcoordError, ValueError):
    """A triangle coordinate vector fails validation.

    The attached :attr:`report` lists every violated condition.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class InfeasibleRegionError(LamcoordError, ValueError):
    """A region census quantity came out negative.

    The coordinate vector is not the intersection data of any lamination.
    """

    def __init__(self, region: str, quantity: str, value: int):
        super().__init__(
            f"infeasible census in {region}: {quantity} = {value} < 0"
        )
        self.region = region
        self.quantity = quantity
        self.value = value


class ZeroCoordinatesError(LamcoordError, ValueError):
    """The all-zero tuple, which is excluded from the coordinate codomain."""


class NotInImageError(LamcoordError, ValueError):
    """A coordinate tuple that is not the image of any integral lamination.

    This happens exactly when some t_s has a different parity from the
    derived straight-core count psi_s: the wall-count equalities force
    t_s == psi_s (mod 2) for every lamination, so no lamination maps to
    such a tuple and the inverse map is undefined on it.
    """

    def __init__(self, bad_indices: tuple[int, ...]):
        where = ", ".join(f"t_{s} vs psi_{s}" for s in bad_indices)
        super().__init__(
            "tuple is not the coordinate of any integral lamination: "
            f"parity mismatch at {where}"
        )
        self.bad_indices = bad_indices


class MalformedDiagramError(LamcoordError, ValueError):
    """A strand diagram whose slots are not matched exactly once per side."""


class WorkCeilingExceeded(LamcoordError, RuntimeError):
    """An enumeration exceeded its configured work ceiling."""

    def __init__(self, ceiling: int):
        super().__init__(f"enumeration exceeded the work ceiling of {ceiling}")
        self.ceiling = ceiling
