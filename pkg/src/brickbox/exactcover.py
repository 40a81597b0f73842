"""Brute-force tileability oracle via grid discretization and exact cover.

Independent of the split-certificate machinery: a rational box and brick
list are snapped to the coarsest per-axis grid on which every extent is an
integer cell count, every in-bounds (brick type, integer offset) placement
becomes a row covering its footprint cells, and tileability becomes exact
cover (select rows partitioning all cells).

The search is Knuth-style Algorithm X over a dict-of-sets sparse matrix:
always branch on the column with the fewest candidate rows (ties broken by
lowest cell index), try rows in increasing id order. That makes results
deterministic and kills adversarial unsatisfiable instances quickly. The
search is iterative, counts every row trial as a node, and reports hitting
the node budget as a distinct "timeout" outcome; a budget hit is never
converted into UNSAT.

A solver run owns its mutable matrix and must stay on one thread; inputs
and outcomes are immutable values, and independent runs do not interfere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .geometry import BoxSpec, Brick, Placement, Tiling, rational_gcd

DEFAULT_GRID_CAP = 10**6
DEFAULT_NODE_BUDGET = 10**7

SAT = "sat"
UNSAT = "unsat"
TIMEOUT = "timeout"


class GridTooLarge(Exception):
    """Raised when discretization would exceed the configured cell cap."""


# ---------------------------------------------------------------------------
# Grid discretization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GridModel:
    """Per-axis grid units, cell counts, and integer brick footprints."""

    unit: tuple[Fraction, ...]
    cells: tuple[int, ...]
    brick_footprints: tuple[tuple[int, ...], ...]

    @property
    def cell_count(self) -> int:
        return math.prod(self.cells)


@dataclass(frozen=True)
class CoverRow:
    """One candidate placement: brick type, grid offset, covered cell ids."""

    brick: int
    offset: tuple[int, ...]
    cells: tuple[int, ...]


@dataclass(frozen=True)
class CoverProblem:
    """Exact-cover instance: one column per grid cell, one row per placement."""

    grid: GridModel
    rows: tuple[CoverRow, ...]

    @property
    def n_columns(self) -> int:
        return self.grid.cell_count


@dataclass(frozen=True)
class CoverOutcome:
    """Search result: status, solutions found (row id sets), nodes used."""

    status: str
    solutions: tuple[tuple[int, ...], ...] = ()
    nodes: int = 0


@dataclass(frozen=True)
class TileOutcome:
    """Tileability result: status plus the reconstructed tiling when sat."""

    status: str
    tiling: Tiling | None = None
    nodes: int = 0


def build_grid(
    box: BoxSpec, bricks: Sequence[Brick], cap: int = DEFAULT_GRID_CAP
) -> GridModel:
    """Coarsest per-axis grid on which box and all brick extents are integral.

    The unit on each axis is the rational gcd of the box extent and every
    brick extent there. Raises GridTooLarge when the total cell count
    exceeds `cap`.
    """
    if not bricks:
        raise ValueError("need at least one brick type")
    d = box.dim
    for b in bricks:
        if b.dim != d:
            raise ValueError("box and brick dimensions differ")
    unit = []
    for ax in range(d):
        g = box.dims[ax]
        for b in bricks:
            g = rational_gcd(g, b.dims[ax])
        unit.append(g)
    cells = tuple(int(box.dims[ax] / unit[ax]) for ax in range(d))
    total = math.prod(cells)
    if total > cap:
        raise GridTooLarge(f"grid needs {total} cells, cap is {cap}")
    footprints = tuple(
        tuple(int(b.dims[ax] / unit[ax]) for ax in range(d)) for b in bricks
    )
    return GridModel(unit=tuple(unit), cells=cells, brick_footprints=footprints)


def _strides(cells: tuple[int, ...]) -> tuple[int, ...]:
    # Row-major: the last axis varies fastest.
    out = [1] * len(cells)
    for ax in range(len(cells) - 2, -1, -1):
        out[ax] = out[ax + 1] * cells[ax + 1]
    return tuple(out)


def build_cover_problem(grid: GridModel) -> CoverProblem:
    """Enumerate all in-bounds placements as cover rows, in deterministic order.

    Rows are ordered by brick type, then by offset row-major; cell ids are
    row-major over the grid. Bricks too large for the grid simply produce
    no rows.
    """
    strides = _strides(grid.cells)
    rows: list[CoverRow] = []
    for brick_idx, footprint in enumerate(grid.brick_footprints):
        spans = [grid.cells[ax] - footprint[ax] for ax in range(len(grid.cells))]
        if any(s < 0 for s in spans):
            continue
        for offset in product(*(range(s + 1) for s in spans)):
            covered = tuple(
                sum((offset[ax] + rel[ax]) * strides[ax] for ax in range(len(offset)))
                for rel in product(*(range(f) for f in footprint))
            )
            rows.append(CoverRow(brick=brick_idx, offset=offset, cells=covered))
    return CoverProblem(grid=grid, rows=tuple(rows))


def cover_matrix_text(problem: CoverProblem) -> str:
    """Sparse text form of the cover matrix: per line, row id then cell ids."""
    lines = [
        f"{rid} {' '.join(str(c) for c in row.cells)}" for rid, row in enumerate(problem.rows)
    ]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# Algorithm X
# ---------------------------------------------------------------------------


def _select(X: dict, Y: dict, rid: int) -> list:
    removed = []
    for j in Y[rid]:
        for i in X[j]:
            for k in Y[i]:
                if k != j:
                    X[k].remove(i)
        removed.append(X.pop(j))
    return removed


def _deselect(X: dict, Y: dict, rid: int, removed: list) -> None:
    for j in reversed(Y[rid]):
        X[j] = removed.pop()
        for i in X[j]:
            for k in Y[i]:
                if k != j:
                    X[k].add(i)


def solve_exact_cover(
    problem: CoverProblem,
    limit: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> CoverOutcome:
    """Find row sets partitioning all columns, up to `limit` of them.

    Status "unsat" means the search space was exhausted with no solution;
    "timeout" means the node budget ran out first (any solutions already
    found are included). With limit=1 the first solution is returned as
    soon as it is found.
    """
    X: dict[int, set[int]] = {c: set() for c in range(problem.n_columns)}
    Y: dict[int, tuple[int, ...]] = {}
    for rid, row in enumerate(problem.rows):
        Y[rid] = row.cells
        for c in row.cells:
            X[c].add(rid)

    if not X:
        return CoverOutcome(SAT, ((),), 0)

    solutions: list[tuple[int, ...]] = []
    nodes = 0
    hit_budget = False

    def candidates() -> list[int]:
        col = min(X, key=lambda c: (len(X[c]), c))
        return sorted(X[col])

    frames: list[list] = [[candidates(), 0]]
    sel_rows: list[int] = []
    sel_removed: list[list] = []

    while frames:
        cands, idx = frames[-1]
        if len(sel_rows) == len(frames):
            _deselect(X, Y, sel_rows[-1], sel_removed[-1])
            sel_rows.pop()
            sel_removed.pop()
        if idx >= len(cands):
            frames.pop()
            continue
        frames[-1][1] = idx + 1
        rid = cands[idx]
        nodes += 1
        if nodes > node_budget:
            hit_budget = True
            break
        sel_rows.append(rid)
        sel_removed.append(_select(X, Y, rid))
        if not X:
            solutions.append(tuple(sel_rows))
            if limit is not None and len(solutions) >= limit:
                break
            continue
        frames.append([candidates(), 0])

    if hit_budget:
        status = TIMEOUT
    elif solutions:
        status = SAT
    else:
        status = UNSAT
    return CoverOutcome(status, tuple(solutions), nodes)


def rows_to_tiling(
    box: BoxSpec, bricks: Sequence[Brick], problem: CoverProblem, row_ids: Sequence[int]
) -> Tiling:
    """Map selected cover rows back to exact rational placements."""
    unit = problem.grid.unit
    placements = tuple(
        Placement(
            problem.rows[rid].brick,
            tuple(o * u for o, u in zip(problem.rows[rid].offset, unit)),
        )
        for rid in row_ids
    )
    return Tiling(bricks=tuple(bricks), placements=placements, box=box)


def exact_cover_tileable(
    box: BoxSpec,
    bricks: Sequence[Brick],
    grid_cap: int = DEFAULT_GRID_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> TileOutcome:
    """Decide tileability by translates of the given brick types.

    Returns a tiling (which passes geometric verification) when satisfiable,
    "unsat" when the exhaustive search rules a tiling out, and "timeout"
    when the node budget was exhausted first. Raises GridTooLarge when the
    instance does not fit the grid cap.
    """
    grid = build_grid(box, bricks, cap=grid_cap)
    problem = build_cover_problem(grid)
    outcome = solve_exact_cover(problem, limit=1, node_budget=node_budget)
    if outcome.status == SAT:
        tiling = rows_to_tiling(box, bricks, problem, outcome.solutions[0])
        return TileOutcome(SAT, tiling=tiling, nodes=outcome.nodes)
    return TileOutcome(outcome.status, nodes=outcome.nodes)
