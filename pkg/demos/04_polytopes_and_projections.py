"""Orbit polytopes and the search for short projections.

The fixed points of a generalized Grassmannian sit at the vertices of a
Weyl orbit polytope; the bandwidth of a one-parameter action is the
length of the polytope's shadow on a line.  The closed formula claims
the shortest shadow among nonnegative coweights is attained at a
fundamental one, which this script checks by brute force projection.
"""

import random

from grassband import (
    GeneralizedGrassmannian,
    bandwidth,
    bandwidth_oracle,
    dominance_fuzz,
    k_index,
    minimal_bandwidth,
    polytope_vertices,
)


def vertices(name="B3", node=1):
    X = GeneralizedGrassmannian(name, node)
    poly = polytope_vertices(X)
    print(f"{X}: {len(poly)} vertices of the fixed-point polytope (root coordinates)")
    for v in poly.vertices:
        print(f"   {v}")


def formula_vs_oracle(name="F4", node=1):
    X = GeneralizedGrassmannian(name, node)
    print(f"\n{X}: projected spread on O(k), k = {k_index(X)}")
    for i in range(1, X.dtype.rank + 1):
        cw = tuple(int(a == i - 1) for a in range(X.dtype.rank))
        formula = bandwidth(X, i).scaled
        brute = bandwidth_oracle(X, cw)
        print(f"   node {i}: closed formula {formula:>3}   brute force {brute:>3}")
    rep = minimal_bandwidth(X)
    print(f"   minimal bandwidth on O(1): {rep.minimal_value} at nodes {rep.minimizers}")


def random_projections(name="C3", node=1, trials=300, seed=7):
    X = GeneralizedGrassmannian(name, node)
    res = dominance_fuzz(X, trials=trials, seed=seed)
    print(f"\n{X}: {trials} random nonnegative coweights, seed {seed}")
    print(f"   lower bound k*minimal = {res.bound}; "
          f"tightest draw {res.tightest_coweight} with spread {res.tightest_value}")
    print(f"   dominance holds: {res.passed}")
    # a couple of hand-picked projections for comparison
    rng = random.Random(0)
    for _ in range(3):
        cw = tuple(rng.randint(0, 2) for _ in range(X.dtype.rank))
        if not any(cw):
            continue
        print(f"   spread along {cw}: {bandwidth_oracle(X, cw)}")


if __name__ == "__main__":
    vertices()
    formula_vs_oracle()
    random_projections()
