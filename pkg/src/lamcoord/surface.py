"""Surface signatures and the region decomposition of N_{k,n}.

The surface N_{k,n} is non-orientable of genus k (k crosscaps) with n
punctures and one boundary component, drawn in a standard disk model with
the punctures 1..n left to right followed by the crosscaps 1..k.  The arc
system consists of

* alpha_1 .. alpha_{2n-2}: for each puncture i >= 2 the two arcs joining it
  to the boundary (odd index above the puncture, even index below),
* beta_1 .. beta_{n+k-1}: boundary-to-boundary chords, beta_i separating
  feature i (puncture or crosscap) from feature i+1,
* gamma_1 .. gamma_{k-1}: boundary-to-boundary arcs surrounding crosscaps
  1 .. k-1,
* c_1 .. c_k: the one-sided core curves of the crosscaps.

Cutting along the beta arcs decomposes the surface into n + k regions, left
to right: the end region Delta_0 containing puncture 1, the punctured
squares S_1 .. S_{n-1} (S_i contains puncture i+1), the crosscap squares
S'_1 .. S'_{k-1} (S'_i contains crosscap i and the arc gamma_i), and the
end region Delta'_k containing crosscap k.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import SignatureError

__all__ = [
    "SurfaceSignature",
    "signature",
    "RegionKind",
    "RegionId",
    "regions",
    "region_walls",
]


@dataclass(frozen=True, slots=True)
class SurfaceSignature:
    """The pair (k, n): genus k with n punctures and one boundary component.

    Valid signatures have k >= 1, n >= 1 and n + k >= 3.  The excluded
    surface N_{1,1} has no well-defined coordinate inverse: both maxima in
    the inverse formula would range over empty index sets.
    """

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise SignatureError(f"genus k must be >= 1, got {self.k}")
        if self.n < 1:
            raise SignatureError(f"puncture count n must be >= 1, got {self.n}")
        if self.n + self.k < 3:
            raise SignatureError(
                f"n + k must be >= 3, got n={self.n}, k={self.k}"
            )

    @property
    def alpha_count(self) -> int:
        return 2 * self.n - 2

    @property
    def beta_count(self) -> int:
        return self.n + self.k - 1

    @property
    def gamma_count(self) -> int:
        return self.k - 1

    @property
    def core_count(self) -> int:
        return self.k

    @property
    def s_region_count(self) -> int:
        return self.n - 1

    @property
    def sprime_region_count(self) -> int:
        return self.k - 1

    @property
    def b_count(self) -> int:
        """Length of the b block of a Dynnikov tuple, one per wall pair."""
        return self.n + self.k - 2

    @property
    def dynnikov_length(self) -> int:
        """Total number of entries of a Dynnikov tuple (a; b; t; c)."""
        return 2 * (self.n + self.k - 2) + self.k

    def __str__(self) -> str:
        return f"N_{{{self.k},{self.n}}}"


def signature(k: int, n: int) -> SurfaceSignature:
    """Validate and build the signature for N_{k,n}."""
    return SurfaceSignature(k=k, n=n)


class RegionKind(enum.Enum):
    DELTA_ZERO = "delta_zero"
    S = "s"
    S_PRIME = "s_prime"
    DELTA_PRIME_K = "delta_prime_k"


@dataclass(frozen=True, slots=True)
class RegionId:
    """One region of the decomposition.

    ``index`` is the 1-based region index for S and S' regions and 0 for
    the two end regions.
    """

    kind: RegionKind
    index: int = 0

    def __str__(self) -> str:
        if self.kind is RegionKind.DELTA_ZERO:
            return "Delta_0"
        if self.kind is RegionKind.S:
            return f"S_{self.index}"
        if self.kind is RegionKind.S_PRIME:
            return f"S'_{self.index}"
        return "Delta'_k"


def regions(sig: SurfaceSignature) -> list[RegionId]:
    """All regions in left-to-right order; the list has length n + k."""
    out = [RegionId(RegionKind.DELTA_ZERO)]
    out.extend(RegionId(RegionKind.S, i) for i in range(1, sig.n))
    out.extend(RegionId(RegionKind.S_PRIME, i) for i in range(1, sig.k))
    out.append(RegionId(RegionKind.DELTA_PRIME_K))
    return out


def region_walls(sig: SurfaceSignature, region: RegionId) -> tuple[int | None, int | None]:
    """The 1-based beta indices bounding a region on the left and right.

    End regions have only one wall; the missing side is None.
    """
    if region.kind is RegionKind.DELTA_ZERO:
        return (None, 1)
    if region.kind is RegionKind.S:
        return (region.index, region.index + 1)
    if region.kind is RegionKind.S_PRIME:
        return (sig.n + region.index - 1, sig.n + region.index)
    return (sig.n + sig.k - 1, None)
