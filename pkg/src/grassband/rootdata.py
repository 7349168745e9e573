"""Exact combinatorial data of finite root systems.

Everything here is computed from the Cartan matrix alone, in Bourbaki
node numbering.  Roots and weights are coordinate vectors in the basis
of simple roots: roots carry integer coordinates, weights exact
rationals (`fractions.Fraction`).  No Euclidean realization is used;
the only bilinear data is the coroot/root pairing encoded by the
Cartan matrix ``C[i][j] = alpha_i^v(alpha_j)`` (1-based nodes).

Node numbering (Bourbaki)::

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) = n      double bond, node n short
    C_n   1 - 2 - ... - (n-1) = n      double bond, node n long
    D_n   1 - 2 - ... - (n-2) < (n-1, n)   fork at n-2
    E_n   1 - 3 - 4 - 5 - 6 [- 7 [- 8]],  2 attached to 4
    F_4   1 - 2 = 3 - 4                double bond, nodes 3,4 short
    G_2   1 = 2                        triple bond, node 1 short

All public functions accept either a :class:`DynkinType` or a string
such as ``"E6"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "DynkinType",
    "DiagramAutomorphism",
    "RootSystem",
    "root_system",
    "cartan_matrix",
    "positive_roots",
    "fundamental_weight",
    "coroot_pairing",
    "coweight_pairing",
    "opposition_involution",
]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"E": 8, "F": 4, "G": 2}

TypeLike = Union["DynkinType", str]
Weight = tuple  # coefficient vector in the simple-root basis


@dataclass(frozen=True, order=True)
class DynkinType:
    """A connected finite Dynkin type, e.g. ``DynkinType('E', 6)``."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in "ABCDEFG":
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int):
            raise ValueError("rank must be an integer")
        lo = _MIN_RANK[self.family]
        hi = _MAX_RANK.get(self.family)
        if self.rank < lo or (hi is not None and self.rank > hi):
            bound = f"{lo}..{hi}" if hi is not None else f">= {lo}"
            raise ValueError(f"rank {self.rank} invalid for family {self.family} (expected {bound})")

    @classmethod
    def parse(cls, text: TypeLike) -> "DynkinType":
        if isinstance(text, DynkinType):
            return text
        s = str(text).strip().upper().replace("_", "")
        if len(s) < 2 or s[0] not in "ABCDEFG" or not s[1:].isdigit():
            raise ValueError(f"cannot parse Dynkin type from {text!r}")
        return cls(s[0], int(s[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A node permutation preserving the Cartan matrix.

    ``perm[i-1]`` is the image of node ``i`` (both 1-based).
    """

    perm: tuple

    def __call__(self, node: int) -> int:
        return self.perm[node - 1]

    @property
    def is_identity(self) -> bool:
        return all(self.perm[i] == i + 1 for i in range(len(self.perm)))

    def __str__(self) -> str:
        if self.is_identity:
            return "id"
        cycles = []
        seen = set()
        for i in range(1, len(self.perm) + 1):
            if i in seen or self(i) == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            cycles.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(cycles)


def _cartan_entries(dtype: DynkinType) -> list:
    n = dtype.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):  # 1-based nodes
        C[i - 1][j - 1] = cij
        C[j - 1][i - 1] = cji

    fam = dtype.family
    if fam in ("A", "B", "C"):
        for i in range(1, n):
            bond(i, i + 1)
        if fam == "B":
            C[n - 1][n - 2] = -2  # alpha_n^v(alpha_{n-1})
        elif fam == "C":
            C[n - 2][n - 1] = -2
    elif fam == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif fam == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(2, 4)
    elif fam == "F":
        bond(1, 2)
        bond(2, 3)
        bond(3, 4)
        C[2][1] = -2  # alpha_3^v(alpha_2)
    elif fam == "G":
        bond(1, 2, -3, -1)  # alpha_1^v(alpha_2) = -3
    return C


def _invert_exact(rows):
    """Exact inverse and determinant of an integer matrix, by Gauss-Jordan."""
    n = len(rows)
    A = [[Fraction(rows[i][j]) for j in range(n)]
         + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        det *= A[col][col]
        inv_p = 1 / A[col][col]
        A[col] = [x * inv_p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    inverse = [[A[i][n + j] for j in range(n)] for i in range(n)]
    return inverse, det


def _saturate_positive_roots(C) -> list:
    """All positive roots by breadth-first saturation from the simple roots.

    A candidate ``alpha + alpha_i`` is admitted exactly when the root
    string condition ``q = p - <alpha_i^v, alpha> >= 1`` holds, where p
    is how far the string continues below alpha; p is read off the
    already-generated lower-height roots.
    """
    n = len(C)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    layers = [list(simple)]
    while layer:
        nxt = []
        for alpha in layer:
            for i in range(n):
                pairing = sum(C[i][a] * alpha[a] for a in range(n))
                p = 0
                below = list(alpha)
                while True:
                    below[i] -= 1
                    if min(below) < 0 or tuple(below) not in found:
                        break
                    p += 1
                if p - pairing >= 1:
                    up = list(alpha)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in found:
                        found.add(cand)
                        nxt.append(cand)
        if nxt:
            layers.append(nxt)
        layer = nxt
    roots = [r for lay in layers for r in sorted(set(lay))]
    return roots


def _coroot_table(C, all_roots) -> dict:
    """Coroot coordinate vector (simple-coroot basis) for every root.

    Generated by reflecting (root, coroot) pairs from the simple ones;
    the coroot coordinates transform by the transposed Cartan rule.
    """
    n = len(C)
    table = {}
    stack = []
    for i in range(n):
        e = tuple(int(i == j) for j in range(n))
        table[e] = e
        stack.append(e)
    while stack:
        root = stack.pop()
        cor = table[root]
        for k in range(n):
            pairing = sum(C[k][a] * root[a] for a in range(n))
            r2 = list(root)
            r2[k] -= pairing
            r2 = tuple(r2)
            if r2 not in table:
                c2 = list(cor)
                c2[k] -= sum(cor[a] * C[a][k] for a in range(n))
                table[r2] = tuple(c2)
                stack.append(r2)
    missing = [r for r in all_roots if r not in table]
    if missing:
        raise AssertionError(f"coroot generation missed {len(missing)} roots")
    return table


class RootSystem:
    """Cached combinatorial data of one finite root system.

    Attributes
    ----------
    dtype : DynkinType
    rank : int
    cartan : tuple of tuple of int
        ``cartan[i][j] = alpha_{i+1}^v(alpha_{j+1})``.
    positive_roots : tuple of tuple of int
        Sorted by (height, coordinates); the last entry is the highest root.
    fundamental_weights : tuple of tuple of Fraction
        ``fundamental_weights[j-1]`` solves ``alpha_i^v(w_j) = delta_ij``.
    cartan_determinant : int
        Index of the root lattice in the weight lattice; positive.
    """

    def __init__(self, dtype: DynkinType):
        self.dtype = dtype
        self.rank = n = dtype.rank
        C = _cartan_entries(dtype)
        self.cartan = tuple(tuple(row) for row in C)
        self._cartan_np = np.array(C, dtype=np.int64)

        pos = _saturate_positive_roots(C)
        self.positive_roots = tuple(pos)
        self.num_positive = len(pos)
        self.highest_root = pos[-1]
        top_height = sum(self.highest_root)
        if len(pos) > 1 and sum(pos[-2]) == top_height:
            raise AssertionError("highest root is not unique; system not irreducible?")
        self.highest_height = top_height

        neg = [tuple(-x for x in r) for r in pos]
        self.all_roots = tuple(pos + neg)
        self._roots_np = np.array(self.all_roots, dtype=np.int64)
        self._root_heights = self._roots_np.sum(axis=1)
        self._root_pos = {r: i for i, r in enumerate(self.all_roots)}

        cor = _coroot_table(C, self.all_roots)
        self._coroots_np = np.array([cor[r] for r in self.all_roots], dtype=np.int64)

        inv, det = _invert_exact(C)
        if not (det > 0):
            raise AssertionError(f"Cartan determinant {det} not positive")
        self.cartan_determinant = int(det)
        # fundamental weight j is column j of the inverse Cartan matrix
        self.fundamental_weights = tuple(
            tuple(inv[a][j] for a in range(n)) for j in range(n)
        )

    # -- basic queries -------------------------------------------------

    def __repr__(self) -> str:
        return f"RootSystem({self.dtype})"

    def fundamental_weight(self, j: int) -> Weight:
        self._check_node(j)
        return self.fundamental_weights[j - 1]

    def is_root(self, vec: Sequence) -> bool:
        return tuple(vec) in self._root_pos

    def root_index(self, vec: Sequence) -> int:
        return self._root_pos[tuple(vec)]

    def _check_node(self, i: int):
        if not 1 <= i <= self.rank:
            raise ValueError(f"node {i} out of range for {self.dtype}")

    # -- pairings and reflections --------------------------------------

    def coroot_pairing(self, i: int, w: Sequence):
        """``alpha_i^v(w)`` for w in simple-root coordinates."""
        self._check_node(i)
        row = self.cartan[i - 1]
        return _as_scalar(sum(row[a] * w[a] for a in range(self.rank)))

    def reflect(self, w: Sequence, i: int) -> Weight:
        """Simple reflection s_i acting on a weight; only coordinate i moves."""
        self._check_node(i)
        p = sum(self.cartan[i - 1][a] * w[a] for a in range(self.rank))
        out = list(w)
        out[i - 1] = out[i - 1] - p
        return tuple(out)

    def root_reflection(self, beta: Sequence, w: Sequence) -> Weight:
        """The reflection attached to the root beta, applied to a weight."""
        d = self._coroots_np[self.root_index(beta)]
        cart_vals = [self.coroot_pairing(a + 1, w) for a in range(self.rank)]
        t = sum(int(d[a]) * cart_vals[a] for a in range(self.rank))
        return tuple(x - t * b for x, b in zip(w, beta))

    # -- dominance -----------------------------------------------------

    def descend_to_antidominant(self, w: Sequence) -> Weight:
        """Unique orbit element with all coroot pairings <= 0.

        Repeatedly reflects at the smallest node with positive pairing;
        the step count is asserted to stay within the number of
        positive roots.
        """
        return self._descend(w, +1)

    def descend_to_dominant(self, w: Sequence) -> Weight:
        return self._descend(w, -1)

    def _descend(self, w: Sequence, sign: int) -> Weight:
        scale = _common_denominator(w)
        cur = [int(x * scale) for x in w]
        C = self.cartan
        n = self.rank
        steps = 0
        while True:
            for i in range(n):
                p = sum(C[i][a] * cur[a] for a in range(n))
                if sign * p > 0:
                    cur[i] -= p
                    steps += 1
                    break
            else:
                break
            if steps > self.num_positive:
                raise AssertionError("descent exceeded the longest-element length")
        if scale == 1:
            return tuple(cur)
        return tuple(Fraction(x, scale) for x in cur)


def _as_scalar(x):
    """Collapse integral Fractions to int; keep exact value."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    return x


def _common_denominator(w: Iterable) -> int:
    d = 1
    for x in w:
        if isinstance(x, Fraction):
            d = lcm(d, x.denominator)
    return d


@lru_cache(maxsize=None)
def _cached_root_system(dtype: DynkinType) -> RootSystem:
    return RootSystem(dtype)


def root_system(dtype: TypeLike) -> RootSystem:
    """The (cached) root system of a Dynkin type."""
    return _cached_root_system(DynkinType.parse(dtype))


# -- module-level operation surface ------------------------------------


def cartan_matrix(dtype: TypeLike) -> tuple:
    """Cartan matrix in the convention ``C[i][j] = alpha_i^v(alpha_j)``."""
    return root_system(dtype).cartan


def positive_roots(dtype: TypeLike) -> tuple:
    """All positive roots, in simple-root coordinates, sorted by height."""
    return root_system(dtype).positive_roots


def fundamental_weight(dtype: TypeLike, j: int) -> Weight:
    """The j-th fundamental weight in simple-root coordinates (exact)."""
    return root_system(dtype).fundamental_weight(j)


def coroot_pairing(dtype: TypeLike, i: int, w: Sequence):
    """``alpha_i^v(w)``; returns an int when the value is integral."""
    return root_system(dtype).coroot_pairing(i, w)


def coweight_pairing(c: Sequence, w: Sequence):
    """Evaluate a coweight ``sum_i c_i w_i^v`` on a weight: ``sum_i c_i m_i(w)``.

    The coweight reads off simple-root coordinates, so no type context
    is needed.  Integer whenever w lies in the root lattice.
    """
    if len(c) != len(w):
        raise ValueError("coweight and weight lengths differ")
    return _as_scalar(sum(ci * wi for ci, wi in zip(c, w)))


def opposition_involution(dtype: TypeLike) -> DiagramAutomorphism:
    """The diagram automorphism sigma with ``antidominant(w_j) = -w_{sigma(j)}``.

    Computed from the antidominant descent, never from a case table.
    """
    rs = root_system(dtype)
    negatives = {tuple(-x for x in w): j + 1 for j, w in enumerate(rs.fundamental_weights)}
    perm = []
    for j in range(1, rs.rank + 1):
        anti = rs.descend_to_antidominant(rs.fundamental_weight(j))
        image = negatives.get(tuple(anti))
        if image is None:
            raise AssertionError(f"antidominant of w_{j} is not minus a fundamental weight")
        perm.append(image)
    return DiagramAutomorphism(tuple(perm))
