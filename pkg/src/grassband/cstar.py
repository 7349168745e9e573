"""One-parameter torus actions obtained by projecting to a single node.

The projection along node i reads off the i-th simple-root coordinate
of every weight.  Applied to the fixed-point data of a generalized
Grassmannian this yields: the bandwidth (closed formula and brute-force
oracle), the grouping of fixed points into integer levels, the finer
partition of each level into orbits of the transversal reflection
group, sign profiles of compasses, equalization, Poincare polynomials,
the additive homology decomposition indexed by components, and the
graded Hasse graph of the cell closure order.

Degree convention: polynomials are in one variable q of complex degree,
so real homological degree is twice the exponent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .grassmannian import GeneralizedGrassmannian, _fixed_point_arrays, k_index
from .rootdata import _as_scalar
from .weyl import ORBIT_CAP

__all__ = [
    "HASSE_CAP",
    "Bandwidth",
    "BandwidthReport",
    "ComponentRecord",
    "Level",
    "LevelDecomposition",
    "SourceSink",
    "BBDecomposition",
    "HasseGraph",
    "DominanceFuzzResult",
    "bandwidth",
    "minimal_bandwidth",
    "bandwidth_oracle",
    "level_decomposition",
    "components",
    "source_sink",
    "is_equalized",
    "poincare_polynomial",
    "bb_decomposition",
    "hasse_graph",
    "dominance_fuzz",
]

#: Separate, lower default cap for Hasse graphs (edge scan is dense).
HASSE_CAP = 10_000

_CHUNK = 1 << 16


# -- small exact-polynomial helpers (coefficient tuples, index = degree)


def poly_eval(p: Sequence, x: int):
    out = 0
    for c in reversed(p):
        out = out * x + c
    return out


def poly_add(a: Sequence, b: Sequence) -> tuple:
    m = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)
    )


def poly_shift(p: Sequence, s: int) -> tuple:
    return (0,) * s + tuple(p)


def is_palindromic(p: Sequence) -> bool:
    return tuple(p) == tuple(reversed(p))


def poly_text(p: Sequence) -> str:
    terms = []
    for d, c in enumerate(p):
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            terms.append(f"{head}q^{d}" if d > 1 else f"{head}q")
    return " + ".join(terms) if terms else "0"


# -- bandwidth ----------------------------------------------------------


@dataclass(frozen=True)
class Bandwidth:
    """Bandwidth of the action projected along one node.

    ``value`` is normalized to the ample generator O(1) (always an
    integer-valued rational); ``scaled`` is the integer value on
    O(k_j), exactly ``k * value``.
    """

    node: int
    value: Fraction
    scaled: int
    k: int


@dataclass(frozen=True)
class BandwidthReport:
    grassmannian: GeneralizedGrassmannian
    per_node: tuple  # Bandwidth per node, ascending
    minimal_value: Fraction
    minimizers: tuple


def bandwidth(X: GeneralizedGrassmannian, i: int) -> Bandwidth:
    """Closed-formula bandwidth along node i: no orbit enumeration.

    The value on O(1) is the i-th coordinate of ``w_j`` minus that of
    its antidominant image.
    """
    rs = X.root_system
    rs._check_node(i)
    w = rs.fundamental_weight(X.node)
    anti = rs.descend_to_antidominant(w)
    val = Fraction(w[i - 1] - anti[i - 1])
    k = k_index(X)
    scaled = val * k
    if scaled.denominator != 1 or val.denominator != 1:
        raise AssertionError(f"bandwidth of {X} along {i} is not integral: {val}")
    return Bandwidth(node=i, value=val, scaled=int(scaled), k=k)


def minimal_bandwidth(X: GeneralizedGrassmannian) -> BandwidthReport:
    """Minimum of the per-node bandwidths with the full minimizer set."""
    per_node = tuple(bandwidth(X, i) for i in range(1, X.dtype.rank + 1))
    minimal = min(b.value for b in per_node)
    minimizers = tuple(b.node for b in per_node if b.value == minimal)
    return BandwidthReport(
        grassmannian=X, per_node=per_node, minimal_value=minimal, minimizers=minimizers
    )


def _validate_coweight(X: GeneralizedGrassmannian, c: Sequence) -> np.ndarray:
    arr = np.array([int(x) for x in c], dtype=np.int64)
    if arr.shape != (X.dtype.rank,):
        raise ValueError(f"coweight length {len(c)} != rank of {X.dtype}")
    if (arr < 0).any() or not arr.any():
        raise ValueError("coweight must be nonnegative and nonzero")
    return arr


def bandwidth_oracle(X: GeneralizedGrassmannian, c: Sequence,
                     cap: int = ORBIT_CAP) -> int:
    """Brute-force bandwidth on O(k_j): spread of the projected vertices.

    This is the oracle the closed formula is validated against; it
    evaluates the coweight on every fixed-point fiber weight.
    """
    arr = _validate_coweight(X, c)
    arrs = _fixed_point_arrays(X, cap)
    vals = arrs.weights @ arr
    return int(vals.max() - vals.min())


# -- sign profiles of compasses ------------------------------------------


def _direction_values(arrs, dvec: np.ndarray) -> np.ndarray:
    """Value of the projection coweight on every root (length 2*|Phi+|)."""
    return arrs.rs._roots_np @ dvec


def _sign_counts(arrs, dvec: np.ndarray):
    """Per fixed point: counts of +/0/- projection values on its compass."""
    dvals = _direction_values(arrs, dvec)
    dpos = dvals > 0
    dneg = dvals < 0
    n_points = len(arrs)
    dim = arrs.X.dimension
    nu_p = np.empty(n_points, dtype=np.int64)
    nu_m = np.empty(n_points, dtype=np.int64)
    R = arrs.rs._roots_np
    for a in range(0, n_points, _CHUNK):
        b = min(a + _CHUNK, n_points)
        mask = (arrs.coweights[a:b] @ R.T) > 0
        sizes = mask.sum(axis=1)
        if not (sizes == dim).all():
            raise AssertionError("compass size differs from the variety dimension")
        nu_p[a:b] = (mask & dpos).sum(axis=1)
        nu_m[a:b] = (mask & dneg).sum(axis=1)
    nu_z = dim - nu_p - nu_m
    return nu_p, nu_z, nu_m


def _node_direction(rank: int, i: int) -> np.ndarray:
    return np.array([int(a == i - 1) for a in range(rank)], dtype=np.int64)


# -- levels and components -----------------------------------------------


@dataclass(frozen=True)
class ComponentRecord:
    """One orbit of the transversal reflections inside a level.

    The sign counts ``nu_plus``/``nu_minus`` are constant on the class
    (asserted); ``dimension`` is the zero count; ``poincare`` is the
    class's own cell-count polynomial, with value at 1 equal to the
    member count.
    """

    level: int
    members: tuple  # fiber weights, lex sorted
    nu_plus: int
    nu_minus: int
    dimension: int
    poincare: tuple

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Level:
    """All fixed points sharing one integer projection value.

    ``profile_counts`` aggregates the (nu_plus, nu_zero, nu_minus)
    triples over the level; the aligned per-point ``members`` and
    ``profiles`` are kept only when the decomposition was built with
    per-point detail (the default; streaming summaries drop them).
    """

    value: int
    count: int
    profile_counts: tuple  # ((nu_plus, nu_zero, nu_minus), multiplicity)
    components: tuple
    members: tuple = ()  # canonical fixed-point positions
    profiles: tuple = ()  # (nu_plus, nu_zero, nu_minus) per member


@dataclass(frozen=True)
class LevelDecomposition:
    grassmannian: GeneralizedGrassmannian
    direction: int
    k: int
    dimension: int
    levels: tuple  # descending by value: source level first

    @property
    def counts(self) -> tuple:
        return tuple(l.count for l in self.levels)

    def level_label(self, value: int):
        """Projection value normalized to O(1)."""
        return _as_scalar(Fraction(value, self.k))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass
class _Analysis:
    """Shared per-(X, i) computation backing the level/component views."""

    arrs: object
    direction: int
    nu: tuple            # (nu_p, nu_z, nu_m) arrays
    internal: np.ndarray  # per point: negatives of a generic perturbation on zeros
    level_of: np.ndarray
    classes: list        # lists of canonical positions, ascending (level, min member)
    class_of: np.ndarray


@lru_cache(maxsize=32)
def _analyze(X: GeneralizedGrassmannian, i: int, cap: int) -> _Analysis:
    rs = X.root_system
    rs._check_node(i)
    arrs = _fixed_point_arrays(X, cap)
    n = rs.rank
    d_i = _node_direction(n, i)
    nu_p, nu_z, nu_m = _sign_counts(arrs, d_i)

    # Perturb by a one-vector scaled so it can never flip a nonzero
    # sign: negatives of the perturbation minus negatives of d_i count
    # negative-height compass roots among the d_i-zeros, i.e. the cell
    # codimension inside the component.
    big = 1 + 2 * rs.highest_height
    pert = big * d_i + np.ones(n, dtype=np.int64)
    _, _, nu_m_pert = _sign_counts(arrs, pert)
    internal = nu_m_pert - nu_m
    if (internal < 0).any() or (internal > nu_z).any():
        raise AssertionError("perturbation flipped a nonzero compass sign")

    level_of = arrs.weights[:, i - 1].copy()

    # transversal reflections s_k, k != i, preserve levels; their orbits
    # on the fixed points are the components
    uf = _UnionFind(len(arrs))
    index = arrs.position_index()
    C = rs._cartan_np
    W = arrs.weights
    for k in range(n):
        if k == i - 1:
            continue
        tvals = W @ C[k]
        moved = np.nonzero(tvals)[0]
        T = W[moved].copy()
        T[:, k] -= tvals[moved]
        for row, src in zip(T, moved):
            uf.union(int(src), index[row.tobytes()])

    groups = {}
    for p in range(len(arrs)):
        groups.setdefault(uf.find(p), []).append(p)
    classes = sorted(groups.values(), key=lambda ps: (int(level_of[ps[0]]), ps[0]))
    class_of = np.empty(len(arrs), dtype=np.int64)
    for ci, ps in enumerate(classes):
        for p in ps:
            class_of[p] = ci
    return _Analysis(
        arrs=arrs, direction=i, nu=(nu_p, nu_z, nu_m), internal=internal,
        level_of=level_of, classes=classes, class_of=class_of,
    )


def _component_record(ana: _Analysis, ps: list) -> ComponentRecord:
    nu_p, nu_z, nu_m = ana.nu
    lv = {int(ana.level_of[p]) for p in ps}
    vp = {int(nu_p[p]) for p in ps}
    vm = {int(nu_m[p]) for p in ps}
    vz = {int(nu_z[p]) for p in ps}
    if len(lv) != 1 or len(vp) != 1 or len(vm) != 1:
        raise RuntimeError(
            "sign counts are not constant on a transversal orbit class; "
            "this indicates an implementation bug"
        )
    dim = vz.pop()
    cells = np.bincount(ana.internal[ps], minlength=dim + 1)
    poincare = tuple(int(c) for c in cells)
    if len(poincare) != dim + 1 or not is_palindromic(poincare):
        raise RuntimeError("component cell polynomial is not palindromic of full degree")
    members = tuple(tuple(int(x) for x in ana.arrs.weights[p]) for p in ps)
    return ComponentRecord(
        level=lv.pop(), members=members, nu_plus=vp.pop(), nu_minus=vm.pop(),
        dimension=dim, poincare=poincare,
    )


def components(X: GeneralizedGrassmannian, i: int,
               cap: int = ORBIT_CAP) -> tuple:
    """Transversal-orbit classes of fixed points, ascending by level."""
    ana = _analyze(X, i, cap)
    return tuple(_component_record(ana, ps) for ps in ana.classes)


def level_decomposition(X: GeneralizedGrassmannian, i: int,
                        cap: int = ORBIT_CAP,
                        keep_points: bool = True) -> LevelDecomposition:
    """Group the fixed points by the integer projection value along node i.

    Levels are listed top (source side) to bottom; each carries the
    aggregated sign profiles of the compasses under the projection and
    its partition into components.  With ``keep_points=False`` only the
    summaries are materialized (streaming-friendly for huge orbits).
    """
    ana = _analyze(X, i, cap)
    nu_p, nu_z, nu_m = ana.nu
    values = sorted({int(v) for v in ana.level_of}, reverse=True)
    comps_by_level = {}
    for ps in ana.classes:
        rec = _component_record(ana, ps)
        comps_by_level.setdefault(rec.level, []).append(rec)
    triples = np.stack([nu_p, nu_z, nu_m], axis=1)
    levels = []
    for v in values:
        sel = np.nonzero(ana.level_of == v)[0]
        uniq, counts = np.unique(triples[sel], axis=0, return_counts=True)
        profile_counts = tuple(
            (tuple(int(x) for x in row), int(c)) for row, c in zip(uniq, counts)
        )
        mem = tuple(int(p) for p in sel) if keep_points else ()
        profiles = (
            tuple((int(nu_p[p]), int(nu_z[p]), int(nu_m[p])) for p in sel)
            if keep_points else ()
        )
        levels.append(Level(
            value=v, count=int(sel.size), profile_counts=profile_counts,
            components=tuple(comps_by_level.get(v, ())),
            members=mem, profiles=profiles,
        ))
    if sum(l.count for l in levels) != len(ana.arrs):
        raise AssertionError("levels do not partition the fixed points")
    return LevelDecomposition(
        grassmannian=X, direction=i, k=ana.arrs.k, dimension=X.dimension,
        levels=tuple(levels),
    )


# -- source / sink -------------------------------------------------------


@dataclass(frozen=True)
class SourceSink:
    source_level: int
    sink_level: int
    source: ComponentRecord
    sink: ComponentRecord
    isolated_source: bool


def source_sink(X: GeneralizedGrassmannian, i: int,
                cap: int = ORBIT_CAP) -> SourceSink:
    """Extreme-level components containing the dominant/antidominant point.

    The dominant point always sits in the top level; it is the whole
    source exactly when i is the marked node, which is cross-checked
    against the vanishing of its zero count.
    """
    ana = _analyze(X, i, cap)
    arrs = ana.arrs
    nu_z = ana.nu[1]
    top = int(ana.level_of.max())
    bot = int(ana.level_of.min())
    dom, anti = arrs.dominant_pos, arrs.antidominant_pos
    if int(ana.level_of[dom]) != top or int(ana.level_of[anti]) != bot:
        raise AssertionError("dominant/antidominant points are not at extreme levels")
    source = _component_record(ana, ana.classes[int(ana.class_of[dom])])
    sink = _component_record(ana, ana.classes[int(ana.class_of[anti])])
    isolated = i == X.node
    if isolated != (int(nu_z[dom]) == 0) or isolated != (source.size == 1):
        raise AssertionError("isolated-source criterion is inconsistent")
    return SourceSink(
        source_level=top, sink_level=bot, source=source, sink=sink,
        isolated_source=isolated,
    )


# -- equalization ---------------------------------------------------------


def is_equalized(X: GeneralizedGrassmannian, i: int,
                 cap: int = ORBIT_CAP) -> bool:
    """True iff every compass projection over every fixed point is in {-1,0,1}."""
    rs = X.root_system
    rs._check_node(i)
    arrs = _fixed_point_arrays(X, cap)
    dvals = _direction_values(arrs, _node_direction(rs.rank, i))
    bad = np.abs(dvals) >= 2
    if not bad.any():
        return True
    R = arrs.rs._roots_np
    for a in range(0, len(arrs), _CHUNK):
        b = min(a + _CHUNK, len(arrs))
        mask = (arrs.coweights[a:b] @ R.T) > 0
        if (mask & bad).any():
            return False
    return True


# -- Poincare polynomial and homology decomposition ------------------------


def poincare_polynomial(X: GeneralizedGrassmannian,
                        cap: int = ORBIT_CAP) -> tuple:
    """Cell-count polynomial of X: q^(negatives) summed over fixed points.

    Negatives are counted against the all-ones coweight, which is
    injective on roots (every root has nonzero height).
    """
    arrs = _fixed_point_arrays(X, cap)
    ones = np.ones(X.dtype.rank, dtype=np.int64)
    _, nu_z, nu_m = _sign_counts(arrs, ones)
    if nu_z.any():
        raise AssertionError("height functional vanished on a compass root")
    cells = np.bincount(nu_m, minlength=X.dimension + 1)
    return tuple(int(c) for c in cells)


@dataclass(frozen=True)
class BBDecomposition:
    """Additive decomposition of homology by fixed components.

    Both shift conventions are carried: the total polynomial equals
    ``sum_c q^nu_plus(c) * P_c`` and ``sum_c q^nu_minus(c) * P_c``;
    real-degree shifts are twice the exponents.
    """

    grassmannian: GeneralizedGrassmannian
    direction: int
    components: tuple
    total: tuple

    @property
    def shifts_plus(self) -> tuple:
        return tuple(2 * c.nu_plus for c in self.components)

    @property
    def shifts_minus(self) -> tuple:
        return tuple(2 * c.nu_minus for c in self.components)


def bb_decomposition(X: GeneralizedGrassmannian, i: int,
                     cap: int = ORBIT_CAP) -> BBDecomposition:
    """Components plus the verified double decomposition identity."""
    comps = components(X, i, cap)
    total = poincare_polynomial(X, cap)
    plus = ()
    minus = ()
    for c in comps:
        plus = poly_add(plus, poly_shift(c.poincare, c.nu_plus))
        minus = poly_add(minus, poly_shift(c.poincare, c.nu_minus))
    if plus != total or minus != total:
        raise RuntimeError(
            f"homology decomposition identity failed for {X} along {i}: "
            f"total={total} plus={plus} minus={minus}"
        )
    return BBDecomposition(grassmannian=X, direction=i, components=comps, total=total)


# -- Hasse graph -----------------------------------------------------------


@dataclass(frozen=True)
class HasseGraph:
    """Fixed points graded by cell codimension, with covering edges.

    Nodes are sorted by (rank, fiber weight); an edge joins p to q of
    rank one higher when their fiber weights differ along a compass
    root of p.  The rank generating function equals the Poincare
    polynomial.
    """

    grassmannian: GeneralizedGrassmannian
    ranks: tuple
    weights: tuple
    edges: tuple  # (lower index, upper index)

    @property
    def rank_polynomial(self) -> tuple:
        counts = np.bincount(np.array(self.ranks))
        return tuple(int(c) for c in counts)

    def __len__(self) -> int:
        return len(self.ranks)


def hasse_graph(X: GeneralizedGrassmannian,
                direction: Optional[Sequence] = None,
                cap: int = HASSE_CAP) -> HasseGraph:
    """Graded covering graph of the fixed points.

    ``direction`` must be generic (no compass value vanishes anywhere);
    the default all-ones coweight always is.  The practical cap is
    lower than for plain orbit work since the edge scan is dense.
    """
    arrs = _fixed_point_arrays(X, cap)
    rs = arrs.rs
    if direction is None:
        dvec = np.ones(rs.rank, dtype=np.int64)
    else:
        dvec = _validate_coweight(X, direction)
    _, nu_z, nu_m = _sign_counts(arrs, dvec)
    if nu_z.any():
        raise ValueError("direction is not generic: a compass value vanished")

    n_points = len(arrs)
    order = sorted(range(n_points), key=lambda p: (int(nu_m[p]), tuple(arrs.weights[p])))
    new_pos = {p: t for t, p in enumerate(order)}

    index = arrs.position_index()
    cart_vals = arrs.weights @ rs._cartan_np.T
    roots = rs._roots_np
    coroots = rs._coroots_np
    edges = []
    for p in range(n_points):
        rp = int(nu_m[p])
        for ri in arrs.compass_indices(p):
            t = int(coroots[ri] @ cart_vals[p])
            if t == 0:
                continue
            target = arrs.weights[p] - t * roots[ri]
            q = index[target.tobytes()]
            if int(nu_m[q]) == rp + 1:
                edges.append((new_pos[p], new_pos[q]))
    edges.sort()
    return HasseGraph(
        grassmannian=X,
        ranks=tuple(int(nu_m[p]) for p in order),
        weights=tuple(tuple(int(x) for x in arrs.weights[p]) for p in order),
        edges=tuple(edges),
    )


# -- dominance fuzzing ------------------------------------------------------


@dataclass(frozen=True)
class DominanceFuzzResult:
    """Outcome of seeded random coweight trials against the oracle."""

    trials: int
    seed: int
    bound: int  # k times the minimal closed-formula bandwidth
    tightest_coweight: tuple
    tightest_value: int
    violations: tuple

    @property
    def passed(self) -> bool:
        return not self.violations


def dominance_fuzz(X: GeneralizedGrassmannian, trials: int, seed: int,
                   cap: int = ORBIT_CAP) -> DominanceFuzzResult:
    """Check that no nonnegative coweight beats the fundamental minimum.

    Draws ``trials`` nonnegative nonzero coweights from a seeded
    generator and asserts the oracle never dips below ``k * minimal``;
    reports the tightest witness seen.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    report = minimal_bandwidth(X)
    bound = int(report.minimal_value * k_index(X))
    arrs = _fixed_point_arrays(X, cap)
    rng = random.Random(seed)
    n = X.dtype.rank
    best_val = None
    best_cw = None
    violations = []
    for _ in range(trials):
        while True:
            cw = tuple(rng.randint(0, 3) for _ in range(n))
            if any(cw):
                break
        vals = arrs.weights @ np.array(cw, dtype=np.int64)
        spread = int(vals.max() - vals.min())
        if best_val is None or spread < best_val or (spread == best_val and cw < best_cw):
            best_val, best_cw = spread, cw
        if spread < bound:
            violations.append((cw, spread))
    return DominanceFuzzResult(
        trials=trials, seed=seed, bound=bound,
        tightest_coweight=best_cw, tightest_value=best_val,
        violations=tuple(violations),
    )
