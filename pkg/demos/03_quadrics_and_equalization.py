"""Quadrics and isotropic Grassmannians: levels and equalization.

The even quadric D_n(1) projected along node 1 has an isolated sink, a
smaller even quadric at level zero, and an isolated source; all its
compass projections are +-1 or 0, so the action is equalized.  The odd
quadric B_n(1) projected along node n, and the Lagrangian Grassmannian
C_n(n) projected along node 1, each expose a compass value of 2, so
those actions are not equalized.
"""

from grassband import (
    DynkinType,
    GeneralizedGrassmannian,
    bb_decomposition,
    is_equalized,
    level_decomposition,
)
from grassband.cstar import poly_text


def quadric_story(n=5):
    X = GeneralizedGrassmannian(DynkinType("D", n), 1)
    ld = level_decomposition(X, 1)
    print(f"{X} (even quadric of dimension {ld.dimension}) along node 1:")
    for lv in ld.levels:
        comp = lv.components[0]
        print(f"  level {lv.value:>2}: {lv.count} point(s), component dimension {comp.dimension}")
    bb = bb_decomposition(X, 1)
    print(f"  homology: {poly_text(bb.total)}")
    print(f"  equalized: {is_equalized(X, 1)}")


def non_equalized_examples(n=4):
    odd_quadric = GeneralizedGrassmannian(DynkinType("B", n), 1)
    lagrangian = GeneralizedGrassmannian(DynkinType("C", n), n)
    print(f"\n{odd_quadric} along node {n}: equalized = {is_equalized(odd_quadric, n)}")
    print(f"{lagrangian} along node 1: equalized = {is_equalized(lagrangian, 1)}")
    # the offending value already sits in the compass of the dominant point
    from grassband import fixed_points, k_index, fundamental_weight

    k = k_index(lagrangian)
    dom_weight = tuple(int(k * x) for x in fundamental_weight(lagrangian.dtype, n))
    dom = next(r for r in fixed_points(lagrangian) if r.fiber_weight == dom_weight)
    doubled = [r for r in dom.compass if r[0] == 2]
    print(f"  e.g. compass roots of {lagrangian} at the dominant point with "
          f"first coordinate 2: {doubled}")


if __name__ == "__main__":
    quadric_story()
    non_equalized_examples()
