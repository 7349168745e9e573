"""Generalized Grassmannians as combinatorial objects.

A generalized Grassmannian is a marked connected Dynkin diagram
``X = D(j)``.  Its maximal-torus fixed points are indexed by the Weyl
orbit of ``k_j * w_j`` where ``k_j`` clears the denominators of the
j-th fundamental weight; the weight on the fiber over a fixed point is
the orbit element itself, and the tangent directions at the point are
the image of the marked positive roots under the same group element.

Normalization boundary: fiber weights carry the ``k_j`` factor (they
live in the root lattice); compasses are stored UNSCALED, as plain
roots, because tangent weights are intrinsic to the variety and the
equalization test and sign counts read them directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Iterator

import numpy as np

from .rootdata import DynkinType, root_system
from .weyl import ORBIT_CAP, _IntegerOrbit, _integer_orbit

__all__ = [
    "GeneralizedGrassmannian",
    "MarkedRootSet",
    "FixedPointRecord",
    "FixedPointPolytope",
    "k_index",
    "marked_roots",
    "fixed_points",
    "iter_fixed_points",
    "polytope_vertices",
]


@dataclass(frozen=True)
class GeneralizedGrassmannian:
    """A connected Dynkin diagram with one marked node (1-based)."""

    dtype: DynkinType
    node: int

    def __post_init__(self):
        object.__setattr__(self, "dtype", DynkinType.parse(self.dtype))
        if not 1 <= self.node <= self.dtype.rank:
            raise ValueError(f"node {self.node} out of range for {self.dtype}")

    @property
    def root_system(self):
        return root_system(self.dtype)

    @property
    def dimension(self) -> int:
        """Number of marked positive roots."""
        return len(marked_roots(self).marked)

    def __str__(self) -> str:
        return f"{self.dtype}({self.node})"


@dataclass(frozen=True)
class MarkedRootSet:
    """Positive roots split by the marked coordinate.

    ``marked`` are those with positive j-th coordinate (their count is
    the dimension of the variety); ``complement`` is the sub-root-set
    of the transversal Levi factor.
    """

    marked: tuple
    complement: tuple


@dataclass(frozen=True)
class FixedPointRecord:
    """One torus-fixed point.

    ``fiber_weight`` is the weight on the fiber of O(k_j), an integer
    vector in the root lattice.  ``compass`` holds the unscaled tangent
    roots (internal root order).  ``witness`` is a reduced word from
    the dominant point, 1-based, applied left to right.
    """

    fiber_weight: tuple
    compass: tuple
    witness: tuple


@dataclass(frozen=True)
class FixedPointPolytope:
    """Vertex set of the orbit polytope of ``k_j * w_j`` (lex sorted)."""

    vertices: tuple

    def __len__(self) -> int:
        return len(self.vertices)


def k_index(X: GeneralizedGrassmannian) -> int:
    """Smallest positive integer k with ``k * w_j`` in the root lattice."""
    w = X.root_system.fundamental_weight(X.node)
    out = 1
    for x in w:
        out = lcm(out, getattr(x, "denominator", 1))
    return out


def marked_roots(X: GeneralizedGrassmannian) -> MarkedRootSet:
    """Split the positive roots by the sign of the marked coordinate."""
    j = X.node - 1
    marked, rest = [], []
    for r in X.root_system.positive_roots:
        (marked if r[j] > 0 else rest).append(r)
    return MarkedRootSet(marked=tuple(marked), complement=tuple(rest))


class _FixedPointArrays:
    """Canonically ordered integer data for all fixed points of X.

    ``weights[p]`` is the fiber weight of point p (rows lex-ascending),
    ``coweights[p]`` the transported marking functional; evaluating it
    on the roots singles out the compass of p without replaying words.
    """

    def __init__(self, X: GeneralizedGrassmannian, io: _IntegerOrbit):
        rs = X.root_system
        self.X = X
        self.rs = rs
        self.k = k_index(X)
        self.io = io
        self.order = io.order                      # canonical pos -> BFS idx
        self.weights = io.weights[io.order]
        self.coweights = io.coweights[io.order]
        self.weights.flags.writeable = False
        self.coweights.flags.writeable = False
        self._index = None
        dom = io.weights[0]
        anti = np.array(rs.descend_to_antidominant([int(x) for x in dom]),
                        dtype=np.int64)
        self.dominant_pos = self._locate(dom)
        self.antidominant_pos = self._locate(anti)

    def __len__(self) -> int:
        return self.weights.shape[0]

    def _locate(self, row: np.ndarray) -> int:
        return self.position_index()[row.tobytes()]

    def position_index(self) -> dict:
        if self._index is None:
            self._index = {self.weights[p].tobytes(): p
                           for p in range(self.weights.shape[0])}
        return self._index

    def compass_indices(self, p: int) -> np.ndarray:
        """Root indices of the compass at canonical position p."""
        vals = self.rs._roots_np @ self.coweights[p]
        return np.nonzero(vals > 0)[0]

    def witness(self, p: int) -> tuple:
        return self.io.word(int(self.order[p]))


@lru_cache(maxsize=64)
def _fixed_point_arrays(X: GeneralizedGrassmannian, cap: int) -> _FixedPointArrays:
    rs = X.root_system
    k = k_index(X)
    w = rs.fundamental_weight(X.node)
    start = [int(x * k) for x in w]
    marking = [int(a == X.node - 1) for a in range(rs.rank)]
    io = _integer_orbit(rs, start, cap, coweight=marking)
    return _FixedPointArrays(X, io)


def fixed_points(X: GeneralizedGrassmannian,
                 cap: int = ORBIT_CAP) -> tuple:
    """All fixed points with compasses and witness words, lex-ordered.

    Materializes every compass; for large orbits prefer
    :func:`iter_fixed_points`, which computes records one at a time.
    """
    return tuple(iter_fixed_points(X, cap))


def iter_fixed_points(X: GeneralizedGrassmannian,
                      cap: int = ORBIT_CAP) -> Iterator[FixedPointRecord]:
    """Stream fixed-point records in canonical order, single consumer.

    Compasses are derived per record from the transported marking
    functional, so orbit-wide compass storage is never allocated.
    """
    arrs = _fixed_point_arrays(X, cap)
    roots = arrs.rs.all_roots
    for p in range(len(arrs)):
        idx = arrs.compass_indices(p)
        yield FixedPointRecord(
            fiber_weight=tuple(int(x) for x in arrs.weights[p]),
            compass=tuple(roots[i] for i in idx),
            witness=arrs.witness(p),
        )


def polytope_vertices(X: GeneralizedGrassmannian,
                      cap: int = ORBIT_CAP) -> FixedPointPolytope:
    """Vertices of the polytope of fixed points (all fiber weights)."""
    arrs = _fixed_point_arrays(X, cap)
    verts = tuple(tuple(int(x) for x in row) for row in arrs.weights)
    return FixedPointPolytope(vertices=verts)
