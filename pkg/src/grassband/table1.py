"""The classification table of minimal bandwidths, with golden data.

For every connected Dynkin type and marked node the minimal bandwidth
(normalized to O(1)) and the full set of minimizing projection nodes
are known in closed form; the classical families are stored here as
formulas in the rank and expanded on demand.  ``diff_table`` recomputes
every row from scratch and reports any disagreement.

The D family starts at rank 4: D3 = A3, whose minimizer sets follow the
A-family pattern rather than the D rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cstar import minimal_bandwidth
from .grassmannian import GeneralizedGrassmannian
from .rootdata import DynkinType

__all__ = ["TableRow", "golden_rows", "computed_rows", "diff_table", "render_table"]

CLASSICAL_MAX_DEFAULT = 8


@dataclass(frozen=True)
class TableRow:
    dtype: DynkinType
    node: int
    bandwidth: int
    minimizers: tuple


def _row(fam: str, n: int, j: int, bw: int, mins) -> TableRow:
    return TableRow(DynkinType(fam, n), j, bw, tuple(sorted(mins)))


def golden_rows(nmax: int = CLASSICAL_MAX_DEFAULT) -> tuple:
    """Expanded golden table: one row per (type, node), classical ranks <= nmax."""
    rows = []
    all_nodes = range
    for n in range(1, nmax + 1):
        for j in range(1, n + 1):
            mins = range(1, n + 1) if j in (1, n) else (1, n)
            rows.append(_row("A", n, j, 1, mins))
    for n in range(2, nmax + 1):
        rows.append(_row("B", n, 1, 2, range(1, n + 1)))
        for j in range(2, n):
            rows.append(_row("B", n, j, 2, (1,)))
        rows.append(_row("B", n, n, 1, (1,)))
    for n in range(2, nmax + 1):
        rows.append(_row("C", n, 1, 1, (n,)))
        if n >= 2:
            rows.append(_row("C", n, 2, 2, (1, n) if n > 2 else (1, 2)))
        for j in range(3, n + 1):
            rows.append(_row("C", n, j, 2, (1,)))
    for n in range(4, nmax + 1):
        rows.append(_row("D", n, 1, 1, (n - 1, n)))
        rows.append(_row("D", n, 2, 2, (1, n - 1, n)))
        for j in range(3, n - 1):
            rows.append(_row("D", n, j, 2, (1,)))
        rows.append(_row("D", n, n - 1, 1, (1, 4) if n == 4 else (1,)))
        rows.append(_row("D", n, n, 1, (1, 3) if n == 4 else (1,)))
    for j, (bw, mins) in enumerate(
        [(2, (1, 2, 6)), (2, (1, 6)), (3, (1, 6)), (4, (1, 6)), (3, (1, 6)), (2, (1, 2, 6))], 1
    ):
        rows.append(_row("E", 6, j, bw, mins))
    for j, (bw, mins) in enumerate(
        [(2, (7,)), (3, (7,)), (4, (7,)), (6, (7,)), (5, (7,)), (4, (1, 7)), (2, (1,))], 1
    ):
        rows.append(_row("E", 7, j, bw, mins))
    for j, (bw, mins) in enumerate(
        [(4, (8,)), (6, (8,)), (8, (8,)), (12, (8,)), (10, (8,)), (8, (8,)), (6, (8,)), (4, (1, 8))], 1
    ):
        rows.append(_row("E", 8, j, bw, mins))
    for j, (bw, mins) in enumerate([(4, (1, 4)), (6, (1,)), (4, (1,)), (2, (1,))], 1):
        rows.append(_row("F", 4, j, bw, mins))
    for j, (bw, mins) in enumerate([(2, (2,)), (4, (2,))], 1):
        rows.append(_row("G", 2, j, bw, mins))
    return tuple(rows)


def computed_rows(nmax: int = CLASSICAL_MAX_DEFAULT) -> tuple:
    """Recompute every golden row's cell via the closed formula."""
    rows = []
    for g in golden_rows(nmax):
        rep = minimal_bandwidth(GeneralizedGrassmannian(g.dtype, g.node))
        if rep.minimal_value.denominator != 1:
            raise AssertionError(f"non-integer minimal bandwidth for {g.dtype}({g.node})")
        rows.append(TableRow(g.dtype, g.node, int(rep.minimal_value), rep.minimizers))
    return tuple(rows)


def diff_table(nmax: int = CLASSICAL_MAX_DEFAULT) -> tuple:
    """(golden, computed) pairs that disagree; empty when everything matches."""
    return tuple(
        (g, c) for g, c in zip(golden_rows(nmax), computed_rows(nmax)) if g != c
    )


def render_table(rows, mismatches=()) -> str:
    bad = {(g.dtype, g.node) for g, _ in mismatches}
    header = f"{'Grassmannian':<16} {'minimal bandwidth':>17}   minimizing nodes"
    lines = [header, "-" * len(header)]
    for r in rows:
        mark = "  << MISMATCH" if (r.dtype, r.node) in bad else ""
        mins = ",".join(str(m) for m in r.minimizers)
        lines.append(f"{f'{r.dtype}({r.node})':<16} {r.bandwidth:>17}   {mins}{mark}")
    return "\n".join(lines)
