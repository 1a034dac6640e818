"""Translational microstate counting for a particle in a cubical box.

Standing-wave boundary conditions quantize each momentum component at
p_n = n h / L, n >= 1, one state per interval h/L and per axis (no spin or
+- degeneracy folding).  Counting is exposed two ways that must agree
asymptotically:

- continuum: the phase-space cell density L^3 d^3p / h^3 integrated over an
  axis-aligned momentum box (a real number, deliberately not rounded);
- lattice: the exact number of quantized levels inside the same box.

The momentum-level spacing h/L is also the smallest momentum uncertainty
the box admits: below that spacing there is simply no second state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import SI, PhysicalConstants

DEFAULT_LATTICE_CAP = 100_000_000


class EnumerationCapError(ValueError):
    """The requested region holds more lattice points than the cap allows."""


@dataclass(frozen=True)
class BoxSpec:
    side: float  # L, meters

    def __post_init__(self) -> None:
        if not (self.side > 0.0 and math.isfinite(self.side)):
            raise ValueError(f"box side must be finite and > 0, got {self.side!r}")


@dataclass(frozen=True)
class MomentumRegion:
    p_lo: tuple[float, float, float]
    p_hi: tuple[float, float, float]

    def __post_init__(self) -> None:
        if len(self.p_lo) != 3 or len(self.p_hi) != 3:
            raise ValueError("momentum region needs 3 components per corner")
        for lo, hi in zip(self.p_lo, self.p_hi):
            if hi < lo:
                raise ValueError(f"momentum region needs p_hi >= p_lo, got [{lo!r}, {hi!r}]")

    def side_lengths(self) -> tuple[float, float, float]:
        return tuple(hi - lo for lo, hi in zip(self.p_lo, self.p_hi))


def momentum_level(n: int, box: BoxSpec, constants: PhysicalConstants = SI) -> float:
    """n-th quantized momentum magnitude along one axis: n h / L."""
    if n < 1:
        raise ValueError(f"level index must be >= 1, got {n}")
    return n * constants.h / box.side


def min_momentum_uncertainty(box: BoxSpec, constants: PhysicalConstants = SI) -> float:
    """Smallest momentum uncertainty the box admits: the level spacing h/L."""
    return constants.h / box.side


def count_states_continuum(box: BoxSpec, region: MomentumRegion, constants: PhysicalConstants = SI) -> float:
    """Phase-space cell count: product over axes of (p_hi - p_lo) * L / h."""
    count = 1.0
    for side in region.side_lengths():
        count *= side * box.side / constants.h
    return count


def count_states_lattice(
    box: BoxSpec,
    region: MomentumRegion,
    constants: PhysicalConstants = SI,
    max_points: int = DEFAULT_LATTICE_CAP,
) -> int:
    """Exact count of level triples (n1, n2, n3), all >= 1, inside the region.

    Each axis is enumerated and every candidate level is membership-tested
    against the closed interval [p_lo, p_hi] directly (floating-point
    boundary semantics included); the box region factorizes, so the triple
    count is the product of the per-axis counts.
    """
    spacing = constants.h / box.side
    ranges = []
    estimate = 1
    for lo, hi in zip(region.p_lo, region.p_hi):
        if hi < spacing:
            return 0  # no level at or below the first one fits
        n_start = max(1, int(math.floor(lo / spacing)) - 1)
        n_stop = int(math.floor(hi / spacing)) + 1
        ranges.append((n_start, n_stop))
        estimate *= max(0, n_stop - n_start + 1)
        if estimate > max_points:
            raise EnumerationCapError(
                f"region spans an estimated {estimate} lattice points, above the cap {max_points}"
            )
    count = 1
    for (n_start, n_stop), lo, hi in zip(ranges, region.p_lo, region.p_hi):
        candidates = np.arange(n_start, n_stop + 1, dtype=np.int64)
        levels = candidates * spacing
        count *= int(np.count_nonzero((levels >= lo) & (levels <= hi)))
    return count
