"""Weyl-group action on weights: reflections, orbits, witnesses.

Group elements are never materialized; only their effect on weight
vectors (and one witness word per orbit element) is kept.  Orbits are
enumerated by breadth-first search from the dominant representative,
deduplicating on integer coordinate vectors obtained by clearing
denominators with the global lcm.  Public results are returned in a
canonical total order (lexicographic on coordinates) so output is
bit-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .rootdata import (
    RootSystem,
    TypeLike,
    Weight,
    _common_denominator,
    root_system,
)

__all__ = [
    "ORBIT_CAP",
    "OrbitCapExceeded",
    "WeightOrbit",
    "reflect",
    "orbit",
    "orbit_with_witnesses",
    "antidominant",
]

#: Default ceiling on orbit enumeration; covers every generalized
#: Grassmannian fixed-point set through E8 (largest is 483840) with room.
ORBIT_CAP = 2_000_000


class OrbitCapExceeded(RuntimeError):
    """Raised when an orbit enumeration outgrows its cap.

    Pass a larger ``cap`` explicitly to proceed.
    """

    def __init__(self, cap: int, found: int):
        super().__init__(
            f"orbit exceeds the enumeration cap ({cap}); at least {found} "
            f"elements found -- re-run with a larger cap"
        )
        self.cap = cap
        self.found = found


@dataclass(frozen=True)
class WeightOrbit:
    """A full W-orbit of a weight, in canonical (lexicographic) order.

    ``witnesses`` is present only when requested: one reduced word per
    element (1-based node indices), which reproduces the element when
    applied to the dominant representative via :func:`reflect`, left to
    right.
    """

    elements: tuple
    dominant: Weight
    witnesses: Optional[tuple] = None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w) -> bool:
        return tuple(w) in set(self.elements)


class _IntegerOrbit:
    """BFS enumeration of the orbit of an integer weight vector.

    Rows of ``weights`` are in discovery order; ``order`` is the
    permutation putting them in canonical lexicographic order.
    ``parents``/``vias`` encode the BFS tree (vias are 0-based nodes).
    An optional companion vector is transported contragradiently
    (coweight rule) alongside every element.
    """

    def __init__(self, rs: RootSystem, start: Sequence, cap: int,
                 coweight: Optional[Sequence] = None):
        if cap < 1:
            raise ValueError("cap must be positive")
        n = rs.rank
        C = rs._cartan_np
        start = np.array(start, dtype=np.int64)
        cw = None if coweight is None else np.array(coweight, dtype=np.int64)

        # walk to the dominant representative first: witnesses then
        # measure distance from the dominant element
        guard = 0
        while True:
            pair = C @ start
            neg = np.nonzero(pair < 0)[0]
            if neg.size == 0:
                break
            k = int(neg[0])
            start = start.copy()
            start[k] -= pair[k]
            if cw is not None:
                cw = cw - cw[k] * C[k]
            guard += 1
            if guard > rs.num_positive:
                raise AssertionError("dominance descent exceeded bound")

        seen = {start.tobytes(): 0}
        chunks = [start[None, :]]
        cw_chunks = None if cw is None else [cw[None, :]]
        parents = [-1]
        vias = [-1]
        total = 1
        layer = start[None, :]
        cw_layer = None if cw is None else cw[None, :]
        base = 0

        while layer.shape[0]:
            new_rows = []
            new_cw = []
            for k in range(n):
                pair = layer @ C[k]
                moved = np.nonzero(pair)[0]
                if moved.size == 0:
                    continue
                cand = layer[moved].copy()
                cand[:, k] -= pair[moved]
                if cw_layer is not None:
                    src = cw_layer[moved]
                    cand_cw = src - np.outer(src[:, k], C[k])
                for t, row in enumerate(cand):
                    key = row.tobytes()
                    if key not in seen:
                        seen[key] = total
                        parents.append(base + int(moved[t]))
                        vias.append(k)
                        new_rows.append(row)
                        if cw_layer is not None:
                            new_cw.append(cand_cw[t])
                        total += 1
                        if total > cap:
                            raise OrbitCapExceeded(cap, total)
            if new_rows:
                layer = np.array(new_rows, dtype=np.int64)
                chunks.append(layer)
                if cw_layer is not None:
                    cw_layer = np.array(new_cw, dtype=np.int64)
                    cw_chunks.append(cw_layer)
                base = total - layer.shape[0]
            else:
                layer = np.empty((0, n), dtype=np.int64)

        self.rs = rs
        self.weights = np.concatenate(chunks, axis=0)
        self.coweights = None if cw_chunks is None else np.concatenate(cw_chunks, axis=0)
        self.parents = np.array(parents, dtype=np.int64)
        self.vias = np.array(vias, dtype=np.int64)
        self.order = np.lexsort(self.weights.T[::-1])
        self._index = seen

    def __len__(self) -> int:
        return self.weights.shape[0]

    def word(self, idx: int) -> tuple:
        """Witness word (1-based) for the element at BFS index idx."""
        out = []
        while idx >= 0:
            v = int(self.vias[idx])
            if v < 0:
                break
            out.append(v + 1)
            idx = int(self.parents[idx])
        out.reverse()
        return tuple(out)

    def index_of(self, row: np.ndarray) -> int:
        return self._index[row.tobytes()]


def _integer_orbit(rs: RootSystem, start, cap: int,
                   coweight=None) -> _IntegerOrbit:
    return _IntegerOrbit(rs, start, cap, coweight)


def _scale_to_int(w: Sequence):
    scale = _common_denominator(w)
    return [int(x * scale) for x in w], scale


def _unscale(vec, scale: int):
    if scale == 1:
        return tuple(int(x) for x in vec)
    return tuple(Fraction(int(x), scale) for x in vec)


def reflect(dtype: TypeLike, w: Sequence, i: int) -> Weight:
    """Simple reflection ``s_i`` applied to a weight (involutive)."""
    return root_system(dtype).reflect(w, i)


def orbit(dtype: TypeLike, w: Sequence, cap: int = ORBIT_CAP) -> WeightOrbit:
    """The full W-orbit of a weight, canonically ordered."""
    rs = root_system(dtype)
    ints, scale = _scale_to_int(w)
    io = _integer_orbit(rs, ints, cap)
    elements = tuple(_unscale(io.weights[i], scale) for i in io.order)
    dominant = _unscale(io.weights[0], scale)
    return WeightOrbit(elements=elements, dominant=dominant)


def orbit_with_witnesses(dtype: TypeLike, w: Sequence,
                         cap: int = ORBIT_CAP) -> WeightOrbit:
    """Orbit plus one reduced word per element, from the dominant element."""
    rs = root_system(dtype)
    ints, scale = _scale_to_int(w)
    io = _integer_orbit(rs, ints, cap)
    elements = tuple(_unscale(io.weights[i], scale) for i in io.order)
    witnesses = tuple(io.word(int(i)) for i in io.order)
    dominant = _unscale(io.weights[0], scale)
    return WeightOrbit(elements=elements, dominant=dominant, witnesses=witnesses)


def antidominant(dtype: TypeLike, w: Sequence) -> Weight:
    """The unique orbit element with all coroot pairings <= 0.

    For dominant input this is the longest-element image.
    """
    return root_system(dtype).descend_to_antidominant(w)
