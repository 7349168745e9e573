"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines and
timings.  Every tolerance is exact; runtime ceilings are asserted with
``time.monotonic`` around the computation itself.
"""

import time

from grassband import (
    DynkinType,
    GeneralizedGrassmannian,
    OrbitCapExceeded,
    antidominant,
    bandwidth,
    bandwidth_oracle,
    bb_decomposition,
    components,
    dominance_fuzz,
    fixed_points,
    fundamental_weight,
    is_equalized,
    level_decomposition,
    opposition_involution,
    poincare_polynomial,
)
from grassband.cstar import is_palindromic, poly_add, poly_eval, poly_shift
from grassband.table1 import diff_table
from conftest import all_types, marked_diagrams


def _report(num, text):
    print(f"ACCEPTANCE {num} PASS: {text}")


def test_criterion_1_table_reproduction():
    t0 = time.monotonic()
    mismatches = diff_table(8)
    elapsed = time.monotonic() - t0
    assert mismatches == (), mismatches
    assert elapsed < 1.0, f"table took {elapsed:.2f}s"
    _report(1, f"classification table (n<=8) exact, {elapsed*1000:.0f}ms")


def test_criterion_2_oracle_equivalence():
    t0 = time.monotonic()
    checked = 0
    for t, j in marked_diagrams(6):
        X = GeneralizedGrassmannian(t, j)
        for i in range(1, t.rank + 1):
            cw = tuple(int(a == i - 1) for a in range(t.rank))
            assert bandwidth_oracle(X, cw) == bandwidth(X, i).scaled, (t, j, i)
            checked += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0, f"oracle sweep took {elapsed:.1f}s"
    _report(2, f"oracle == k_j * closed formula on {checked} cases, {elapsed:.1f}s")


def test_criterion_3_cayley_plane():
    t0 = time.monotonic()
    X = GeneralizedGrassmannian("E6", 6)
    ld = level_decomposition(X, 6)
    assert ld.counts == (1, 16, 10)
    comps = components(X, 6)
    assert tuple(c.nu_plus for c in comps) == (0, 5, 16)
    assert tuple(c.nu_minus for c in comps) == (8, 1, 0)
    assert tuple(c.dimension for c in comps) == (8, 10, 0)
    bb = bb_decomposition(X, 6)
    q8 = (1, 1, 1, 1, 2, 1, 1, 1, 1)
    spinor = (1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1)
    assert tuple(c.poincare for c in comps) == (q8, spinor, (1,))
    identity = poly_add(poly_add(q8, poly_shift(spinor, 5)), poly_shift((1,), 16))
    assert bb.total == identity
    assert bb.shifts_plus == (0, 10, 32)
    assert poly_eval(bb.total, 1) == 27
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0, f"Cayley regression took {elapsed:.2f}s"
    _report(3, f"Cayley plane levels/nu/homology exact, {elapsed*1000:.0f}ms")


def test_criterion_4_equalization_fixtures():
    for n in range(2, 7):
        assert is_equalized(GeneralizedGrassmannian(DynkinType("B", n), 1), n) is False
        assert is_equalized(GeneralizedGrassmannian(DynkinType("C", n), n), 1) is False
    for n in range(4, 9):
        assert is_equalized(GeneralizedGrassmannian(DynkinType("D", n), 1), 1) is True
    _report(4, "equalization verdicts for B_n(1), C_n(n), D_n(1) exact")


def test_criterion_5_longest_element():
    for t in all_types(8):
        sigma = opposition_involution(t)
        n = t.rank
        if t.family == "A":
            expected = tuple(n + 1 - i for i in range(1, n + 1))
        elif (t.family, n) == ("E", 6):
            expected = (6, 2, 5, 4, 3, 1)
        elif t.family == "D" and n % 2 == 1:
            expected = tuple(range(1, n - 1)) + (n, n - 1)
        else:
            expected = tuple(range(1, n + 1))
        assert sigma.perm == expected, (t, sigma.perm)
        for j in range(1, n + 1):
            w = fundamental_weight(t, j)
            assert antidominant(t, w) == tuple(-x for x in fundamental_weight(t, sigma(j)))
    _report(5, "antidominant(w_j) = -w_sigma(j); odd-rank D swaps the fork")


def test_criterion_6_property_suites():
    t0 = time.monotonic()
    for t, j in marked_diagrams(5):
        X = GeneralizedGrassmannian(t, j)
        total = poincare_polynomial(X)
        n_points = len(fixed_points(X))
        assert is_palindromic(total)
        assert poly_eval(total, 1) == n_points
        dim = X.dimension
        for i in range(1, t.rank + 1):
            ld = level_decomposition(X, i)
            assert sum(l.count for l in ld.levels) == n_points
            for lv in ld.levels:
                for prof in lv.profiles:
                    assert sum(prof) == dim
            bb = bb_decomposition(X, i)  # asserts component constancy internally
            plus = ()
            minus = ()
            for c in bb.components:
                plus = poly_add(plus, poly_shift(c.poincare, c.nu_plus))
                minus = poly_add(minus, poly_shift(c.poincare, c.nu_minus))
            assert plus == total and minus == total
        seed = 500 + 13 * t.rank + j
        assert dominance_fuzz(X, trials=200, seed=seed).passed
    elapsed = time.monotonic() - t0
    assert elapsed < 120.0, f"property sweep took {elapsed:.1f}s"
    _report(6, f"property suites over all rank<=5 diagrams, {elapsed:.1f}s")


def test_criterion_7_scale():
    t0 = time.monotonic()
    X = GeneralizedGrassmannian("E8", 8)
    ld = level_decomposition(X, 8, keep_points=False)
    n8 = sum(l.count for l in ld.levels)
    assert n8 == 240
    assert ld.counts == (1, 56, 126, 56, 1)

    # an interior node with tens of thousands of fixed points
    X2 = GeneralizedGrassmannian("E8", 2)
    ld2 = level_decomposition(X2, 1, cap=100_000, keep_points=False)
    assert sum(l.count for l in ld2.levels) == 17280

    # interior nodes sit behind the cap mechanism
    try:
        level_decomposition(GeneralizedGrassmannian("E8", 4), 8, cap=10_000)
        raise AssertionError("cap was not enforced")
    except OrbitCapExceeded as exc:
        assert exc.cap == 10_000
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0, f"scale check took {elapsed:.1f}s"
    _report(7, f"E8(8) streaming levels ({n8} points) and E8(2) (17280 points), {elapsed:.1f}s")
