"""Structural decision of two-brick tileability via hyperplane splits.

A box admits a tiling by translates of two brick types exactly when it can
be cut by an axis-aligned hyperplane into two slabs, one filled by a grid
of the first brick and the other by a grid of the second. This module
decides that condition, produces the split as an explicit certificate, and
realizes any certificate as a concrete tiling.

The necessary condition checked first ("key observation"): for every
ordered pair of distinct axes i != j, at least one of L_i/a_i and L_j/b_j
must be an integer. A violating pair yields a frequency-domain witness
point where both brick transforms vanish but the box transform does not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .geometry import BoxSpec, Brick, Placement, Tiling, frac
from .spectral import KeyObservationWitness, key_observation_witness


@dataclass(frozen=True)
class SplitCertificate:
    """A hyperplane split witnessing tileability.

    The cut plane is x_axis = cut with cut = m * a_axis; the left slab holds
    m layers of brick `left_brick`, the right slab n layers of brick
    `right_brick`, and on every other axis the used bricks divide the box
    extent evenly. Degenerate certificates (m = 0 or n = 0) mean one brick
    tiles the whole box alone. Axes are 0-based here; JSON uses 1-based.
    """

    axis: int
    m: int
    n: int
    cut: Fraction
    left_brick: int = 0
    right_brick: int = 1


@dataclass(frozen=True)
class KeyObservationViolation:
    """Ordered axis pair (0-based) with L_i/a_i and L_j/b_j both non-integral."""

    i: int
    j: int


@dataclass(frozen=True)
class DecisionOutcome:
    """Answer of `decide_two_brick` with its supporting evidence.

    Tileable outcomes carry a certificate. Untileable outcomes carry either
    the violated pairwise-integrality condition (plus its frequency witness)
    or, when that condition holds, the reason the split search exhausted.
    """

    tileable: bool
    certificate: SplitCertificate | None = None
    obstruction: KeyObservationViolation | None = None
    witness: KeyObservationWitness | None = None
    reason: str | None = None


def _require_same_dim(box: BoxSpec, *bricks: Brick) -> None:
    for b in bricks:
        if b.dim != box.dim:
            raise ValueError("box and brick dimensions differ")


def _integral(ratio: Fraction) -> bool:
    return ratio.denominator == 1


def one_brick_tileable(box: BoxSpec, brick: Brick) -> bool:
    """True iff a grid of the brick fills the box: every L_j/a_j is an integer."""
    _require_same_dim(box, brick)
    return all(_integral(length / ext) for length, ext in zip(box.dims, brick.dims))


def key_observation_holds(
    box: BoxSpec, a: Brick, b: Brick
) -> KeyObservationViolation | None:
    """Check the pairwise integrality condition necessary for any tiling.

    Returns None when for every ordered pair i != j at least one of L_i/a_i
    and L_j/b_j is an integer; otherwise the lexicographically smallest
    violating pair. For d < 2 the condition is vacuous and None is returned
    by convention.
    """
    _require_same_dim(box, a, b)
    d = box.dim
    if d < 2:
        return None
    bad_a = [i for i in range(d) if not _integral(box.dims[i] / a.dims[i])]
    bad_b = [j for j in range(d) if not _integral(box.dims[j] / b.dims[j])]
    pairs = sorted((i, j) for i in bad_a for j in bad_b if i != j)
    if pairs:
        return KeyObservationViolation(*pairs[0])
    return None


def solve_axis_combination(L, a, b) -> list[tuple[int, int]]:
    """All nonnegative integer pairs (m, n) with m*a + n*b = L, by increasing m."""
    Lf, af, bf = frac(L), frac(a), frac(b)
    if Lf <= 0 or af <= 0 or bf <= 0:
        raise ValueError("lengths must be strictly positive")
    out: list[tuple[int, int]] = []
    m = 0
    while m * af <= Lf:
        n = (Lf - m * af) / bf
        if n.denominator == 1:
            out.append((m, int(n)))
        m += 1
    return out


def find_split(box: BoxSpec, a: Brick, b: Brick) -> SplitCertificate | None:
    """Search for a split certificate; None when no hyperplane cut works.

    Deterministic selection: a degenerate single-brick certificate is
    preferred (brick a checked before brick b), then axes are scanned in
    increasing order and the pair with smallest m is taken on the first
    axis whose cross-sections both bricks divide evenly.
    """
    _require_same_dim(box, a, b)
    d = box.dim
    if one_brick_tileable(box, a):
        m = int(box.dims[0] / a.dims[0])
        return SplitCertificate(axis=0, m=m, n=0, cut=box.dims[0])
    if one_brick_tileable(box, b):
        n = int(box.dims[0] / b.dims[0])
        return SplitCertificate(axis=0, m=0, n=n, cut=Fraction(0))
    for axis in range(d):
        cross_ok = all(
            _integral(box.dims[i] / a.dims[i]) and _integral(box.dims[i] / b.dims[i])
            for i in range(d)
            if i != axis
        )
        if not cross_ok:
            continue
        pairs = solve_axis_combination(box.dims[axis], a.dims[axis], b.dims[axis])
        if pairs:
            m, n = pairs[0]
            return SplitCertificate(axis=axis, m=m, n=n, cut=m * a.dims[axis])
    return None


def decide_two_brick(box: BoxSpec, a: Brick, b: Brick) -> DecisionOutcome:
    """Decide whether translates of the two bricks tile the box.

    Split existence is equivalent to tileability, so the result is exact,
    not a heuristic. Untileable instances are annotated with the violated
    pairwise-integrality condition and its frequency witness when one
    exists, or with the exhaustion reason otherwise.
    """
    cert = find_split(box, a, b)
    if cert is not None:
        return DecisionOutcome(tileable=True, certificate=cert)
    violation = key_observation_holds(box, a, b)
    if violation is not None:
        witness = key_observation_witness(box, a, b, violation.i, violation.j)
        return DecisionOutcome(
            tileable=False,
            obstruction=violation,
            witness=witness,
            reason="pairwise integrality condition violated",
        )
    return DecisionOutcome(tileable=False, reason="no axis admits a hyperplane split")


def validate_certificate(
    cert: SplitCertificate, box: BoxSpec, a: Brick, b: Brick
) -> None:
    """Raise ValueError unless the certificate is valid for (box, a, b)."""
    _require_same_dim(box, a, b)
    d = box.dim
    if not 0 <= cert.axis < d:
        raise ValueError("certificate axis out of range")
    if cert.m < 0 or cert.n < 0:
        raise ValueError("layer counts must be nonnegative")
    axis = cert.axis
    if cert.m * a.dims[axis] + cert.n * b.dims[axis] != box.dims[axis]:
        raise ValueError("layer counts do not fill the split axis")
    if cert.cut != cert.m * a.dims[axis]:
        raise ValueError("cut position does not match m * a_axis")
    for i in range(d):
        if i == axis:
            continue
        if cert.m > 0 and not _integral(box.dims[i] / a.dims[i]):
            raise ValueError(f"brick a does not divide the box on cross axis {i}")
        if cert.n > 0 and not _integral(box.dims[i] / b.dims[i]):
            raise ValueError(f"brick b does not divide the box on cross axis {i}")


def _slab_placements(
    brick_index: int, brick: Brick, box: BoxSpec, axis: int, layers: int, base: Fraction
) -> list[Placement]:
    # Grid of `layers` copies along `axis` starting at `base`, with
    # box.dims[i]/brick.dims[i] copies on every other axis.
    if layers == 0:
        return []
    counts = [
        layers if i == axis else int(box.dims[i] / brick.dims[i])
        for i in range(box.dim)
    ]
    placements = []
    for combo in product(*(range(c) for c in counts)):
        offset = tuple(
            (base if i == axis else Fraction(0)) + combo[i] * brick.dims[i]
            for i in range(box.dim)
        )
        placements.append(Placement(brick_index, offset))
    return placements


def certificate_to_tiling(
    cert: SplitCertificate, box: BoxSpec, a: Brick, b: Brick
) -> Tiling:
    """Materialize a certificate as an explicit tiling of the box.

    The left slab [0, cut] gets m layers of brick a, the right slab the
    n layers of brick b, each layer a full grid across the other axes. The
    result always passes geometric verification.
    """
    validate_certificate(cert, box, a, b)
    placements = _slab_placements(0, a, box, cert.axis, cert.m, Fraction(0))
    placements += _slab_placements(1, b, box, cert.axis, cert.n, cert.cut)
    return Tiling(bricks=(a, b), placements=tuple(placements), box=box)
