"""Exact rational bricks, boxes, placements, and geometric tiling verification.

Every length in this module is a `fractions.Fraction`; all tests are exact
(no floating point, no tolerances). Boxes and bricks are axis-aligned and
origin-anchored: a box spans [0, L_1] x ... x [0, L_d] and a placement
positions a brick by its lowest corner. Bricks are used under translation
only, never rotated.

All types are immutable values; all functions are pure and safe to call
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

import numpy as np

RationalLike = Union[Fraction, int, str]


def frac(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact Fraction.

    Floats are rejected: they are not exact and must be converted by the
    caller deliberately.
    """
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int, or 'p/q' string")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {value!r}") from exc


def _positive_dims(dims: Sequence[RationalLike]) -> tuple[Fraction, ...]:
    out = tuple(frac(v) for v in dims)
    if not out:
        raise ValueError("dimension must be at least 1")
    if any(v <= 0 for v in out):
        raise ValueError("all extents must be strictly positive")
    return out


@dataclass(frozen=True)
class Brick:
    """An axis-aligned d-dimensional rectangle given by its extents."""

    dims: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", _positive_dims(self.dims))

    @property
    def dim(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class BoxSpec:
    """The target box [0, L_1] x ... x [0, L_d]."""

    dims: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", _positive_dims(self.dims))

    @property
    def dim(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class Placement:
    """One placed brick: a type index and the position of its lowest corner."""

    brick_index: int
    offset: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.brick_index < 0:
            raise ValueError("brick_index must be nonnegative")
        object.__setattr__(self, "offset", tuple(frac(v) for v in self.offset))


@dataclass(frozen=True)
class Tiling:
    """A set of placements of the given brick types inside a box.

    Construction validates structure only (dimensions agree, indices are in
    range, every placed brick lies inside the box). Whether the placements
    actually tile the box is decided by `verify_tiling_geometric`.
    """

    bricks: tuple[Brick, ...]
    placements: tuple[Placement, ...]
    box: BoxSpec

    def __post_init__(self) -> None:
        object.__setattr__(self, "bricks", tuple(self.bricks))
        object.__setattr__(self, "placements", tuple(self.placements))
        d = self.box.dim
        for k, b in enumerate(self.bricks):
            if b.dim != d:
                raise ValueError(f"brick {k} has dimension {b.dim}, box has {d}")
        for k, p in enumerate(self.placements):
            if len(p.offset) != d:
                raise ValueError(f"placement {k} has {len(p.offset)} coordinates, box has {d}")
            if p.brick_index >= len(self.bricks):
                raise ValueError(f"placement {k} references unknown brick type {p.brick_index}")
            dims = self.bricks[p.brick_index].dims
            for ax in range(d):
                if p.offset[ax] < 0 or p.offset[ax] + dims[ax] > self.box.dims[ax]:
                    raise ValueError(f"placement {k} extends outside the box on axis {ax}")


@dataclass(frozen=True)
class VerifyOutcome:
    """Result of geometric verification.

    status is one of "ok", "overlap", "volume-mismatch", "coverage-gap".
    The witness depends on the failure: the two offending placement indices
    for an overlap, (placed volume, box volume) for a volume mismatch, and
    the lowest corner of an uncovered cell for a coverage gap.
    """

    status: str
    witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def volume(shape: Brick | BoxSpec) -> Fraction:
    """Exact product of the extents."""
    if not isinstance(shape, (Brick, BoxSpec)):
        raise TypeError("volume expects a Brick or BoxSpec")
    return math.prod(shape.dims, start=Fraction(1))


def interiors_disjoint(p: Placement, q: Placement, bricks: Sequence[Brick]) -> bool:
    """True iff the open boxes of the two placements do not intersect.

    Two open intervals are disjoint iff one ends at or before the other
    starts; the boxes are disjoint iff that happens on at least one axis.
    The test is exact and symmetric in its arguments.
    """
    bp = bricks[p.brick_index]
    bq = bricks[q.brick_index]
    if len(p.offset) != len(q.offset):
        raise ValueError("placements have different dimensions")
    for ax in range(len(p.offset)):
        lo = max(p.offset[ax], q.offset[ax])
        hi = min(p.offset[ax] + bp.dims[ax], q.offset[ax] + bq.dims[ax])
        if lo >= hi:
            return True
    return False


def rational_gcd(x: RationalLike, y: RationalLike) -> Fraction:
    """Largest rational g such that x/g and y/g are both integers.

    For x = p/q and y = r/s in lowest terms this is gcd(p*s, r*q) / (q*s).
    """
    xf, yf = frac(x), frac(y)
    if xf <= 0 or yf <= 0:
        raise ValueError("rational_gcd requires strictly positive arguments")
    return Fraction(
        math.gcd(xf.numerator * yf.denominator, yf.numerator * xf.denominator),
        xf.denominator * yf.denominator,
    )


def coverage_gap(t: Tiling) -> tuple[Fraction, ...] | None:
    """Lowest corner of an uncovered cell, or None when the box is covered.

    The check runs on the arrangement of all placement boundary coordinates
    per axis (the common refinement of every interval endpoint), so it is
    exact for arbitrary rational offsets; they need not align to any shared
    grid unit.
    """
    d = t.box.dim
    coords: list[list[Fraction]] = []
    index: list[dict[Fraction, int]] = []
    for ax in range(d):
        vals = {Fraction(0), t.box.dims[ax]}
        for p in t.placements:
            dims = t.bricks[p.brick_index].dims
            vals.add(p.offset[ax])
            vals.add(p.offset[ax] + dims[ax])
        ordered = sorted(vals)
        coords.append(ordered)
        index.append({v: k for k, v in enumerate(ordered)})
    counts = np.zeros([len(c) - 1 for c in coords], dtype=np.int32)
    for p in t.placements:
        dims = t.bricks[p.brick_index].dims
        window = tuple(
            slice(index[ax][p.offset[ax]], index[ax][p.offset[ax] + dims[ax]])
            for ax in range(d)
        )
        counts[window] += 1
    empty = np.argwhere(counts == 0)
    if empty.size:
        cell = empty[0]
        return tuple(coords[ax][int(cell[ax])] for ax in range(d))
    return None


def verify_tiling_geometric(t: Tiling) -> VerifyOutcome:
    """Check that the placements tile the box exactly.

    Verifies, in order: pairwise interiors are disjoint, placed volume sums
    to the box volume, and the closed placements cover the closed box. The
    first violated condition is reported with a witness. All comparisons are
    exact rational arithmetic.
    """
    for (i, p), (j, q) in combinations(enumerate(t.placements), 2):
        if not interiors_disjoint(p, q, t.bricks):
            return VerifyOutcome("overlap", (i, j))
    placed = sum((volume(t.bricks[p.brick_index]) for p in t.placements), Fraction(0))
    box_vol = volume(t.box)
    if placed != box_vol:
        return VerifyOutcome("volume-mismatch", (placed, box_vol))
    gap = coverage_gap(t)
    if gap is not None:
        return VerifyOutcome("coverage-gap", gap)
    return VerifyOutcome("ok")
