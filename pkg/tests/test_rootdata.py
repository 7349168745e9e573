"""Root-system data: Cartan matrices, roots, weights, pairings, automorphisms."""

from fractions import Fraction
from itertools import permutations

import pytest

from grassband import (
    DynkinType,
    cartan_matrix,
    coroot_pairing,
    coweight_pairing,
    fundamental_weight,
    opposition_involution,
    positive_roots,
    root_system,
)
from conftest import all_types


def test_cartan_a2():
    assert cartan_matrix("A2") == ((2, -1), (-1, 2))


def test_cartan_g2_offdiagonal():
    C = cartan_matrix("G2")
    assert sorted((C[0][1], C[1][0])) == [-3, -1]
    # cross-check the convention via the positive-root count
    assert len(positive_roots("G2")) == 6


def test_cartan_d4_triality():
    C = cartan_matrix("D4")
    assert all(C[i][j] == C[j][i] for i in range(4) for j in range(4))
    assert [j + 1 for j in range(4) if C[1][j] == -1] == [1, 3, 4]
    # brute-force oracle: the diagram automorphism group has order 6
    autos = [
        s for s in permutations(range(4))
        if all(C[s[i]][s[j]] == C[i][j] for i in range(4) for j in range(4))
    ]
    assert len(autos) == 6


def test_invalid_ranks():
    for fam, bad in (("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9), ("F", 3), ("G", 3)):
        with pytest.raises(ValueError):
            DynkinType(fam, bad)
    with pytest.raises(ValueError):
        DynkinType.parse("H4")


_COUNTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n,
           "C": lambda n: n * n, "D": lambda n: n * (n - 1)}
_EXCEPTIONAL = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}
_DIM = {"A": lambda n: (n + 1) ** 2 - 1, "B": lambda n: n * (2 * n + 1),
        "C": lambda n: n * (2 * n + 1), "D": lambda n: n * (2 * n - 1)}


@pytest.mark.parametrize("t", all_types(8), ids=str)
def test_positive_root_counts(t):
    count = len(positive_roots(t))
    if t.family in _COUNTS:
        assert count == _COUNTS[t.family](t.rank)
        # rank + 2|Phi+| equals the classical group dimension
        assert t.rank + 2 * count == _DIM[t.family](t.rank)
    else:
        assert count == _EXCEPTIONAL[(t.family, t.rank)]


def test_b2_roots_brute():
    # rank-2 closure by hand: alpha1, alpha2, alpha1+alpha2, alpha1+2*alpha2
    assert set(positive_roots("B2")) == {(1, 0), (0, 1), (1, 1), (1, 2)}


def test_e8_count_by_dimension():
    # dim g = rank + 2|Phi+| = 248 for E8
    assert 8 + 2 * len(positive_roots("E8")) == 248


@pytest.mark.parametrize("t", all_types(8), ids=str)
def test_roots_nonnegative(t):
    for r in positive_roots(t):
        assert min(r) >= 0 and max(r) > 0


@pytest.mark.parametrize("n", range(1, 9))
def test_fundamental_weight_an_first(n):
    expected = tuple(Fraction(n + 1 - i, n + 1) for i in range(1, n + 1))
    assert fundamental_weight(DynkinType("A", n), 1) == expected


@pytest.mark.parametrize("n", range(4, 9))
def test_fundamental_weight_dn_first(n):
    expected = (1,) * (n - 2) + (Fraction(1, 2), Fraction(1, 2))
    assert fundamental_weight(DynkinType("D", n), 1) == expected


@pytest.mark.parametrize("n", range(2, 9))
def test_fundamental_weight_cn_first(n):
    expected = (1,) * (n - 1) + (Fraction(1, 2),)
    assert fundamental_weight(DynkinType("C", n), 1) == expected


@pytest.mark.parametrize("t", all_types(8), ids=str)
def test_pairing_inverse_property(t):
    # the fundamental-weight matrix is the exact inverse of the Cartan matrix
    for i in range(1, t.rank + 1):
        for j in range(1, t.rank + 1):
            assert coroot_pairing(t, i, fundamental_weight(t, j)) == int(i == j)


def test_pairing_on_simple_roots():
    C = cartan_matrix("F4")
    rs = root_system("F4")
    for i in range(1, 5):
        for j in range(1, 5):
            alpha_j = tuple(int(a == j - 1) for a in range(4))
            assert rs.coroot_pairing(i, alpha_j) == C[i - 1][j - 1]


def test_coweight_pairing_examples():
    assert coweight_pairing((1, 0), (1, 0)) == 1  # w_1^v on alpha_1
    # last coordinate of the first fundamental weight of C_n
    w1 = fundamental_weight("C4", 1)
    assert coweight_pairing((0, 0, 0, 1), w1) == Fraction(1, 2)
    # E6: the marking functional is positive on exactly 16 positive roots
    marked = [r for r in positive_roots("E6") if coweight_pairing((0, 0, 0, 0, 0, 1), r) > 0]
    assert len(marked) == 16


def test_opposition_cases():
    for n in range(2, 9):
        assert opposition_involution(DynkinType("B", n)).is_identity
        assert opposition_involution(DynkinType("C", n)).is_identity
    for n in range(1, 9):
        sigma = opposition_involution(DynkinType("A", n))
        assert sigma.perm == tuple(n + 1 - i for i in range(1, n + 1))
    sigma = opposition_involution("E6")
    assert sigma.perm == (6, 2, 5, 4, 3, 1)


@pytest.mark.parametrize("t", all_types(8), ids=str)
def test_opposition_is_cartan_automorphism(t):
    sigma = opposition_involution(t)
    C = cartan_matrix(t)
    n = t.rank
    # involutive and Cartan-preserving
    assert all(sigma(sigma(i)) == i for i in range(1, n + 1))
    for i in range(n):
        for j in range(n):
            assert C[sigma(i + 1) - 1][sigma(j + 1) - 1] == C[i][j]


def test_highest_root_is_last():
    rs = root_system("E6")
    assert rs.highest_root == (1, 2, 2, 3, 2, 1)
    assert rs.highest_height == 11


@pytest.mark.parametrize("t", all_types(6), ids=str)
def test_coroot_table(t):
    # <beta^v, beta> = 2 and the beta-reflection negates beta, for every root
    rs = root_system(t)
    for beta in rs.all_roots:
        assert rs.root_reflection(beta, beta) == tuple(-x for x in beta)
    # beta^v on a weight, spelled through simple-coroot coordinates,
    # agrees with the defining pairing on simple roots
    for i, beta in enumerate(rs.positive_roots):
        image = rs.root_reflection(beta, rs.fundamental_weight(1))
        delta = tuple(a - b for a, b in zip(rs.fundamental_weight(1), image))
        # s_beta(w) = w - <beta^v, w> beta, so the difference is parallel to beta
        if any(delta):
            ratios = {Fraction(d, b) for d, b in zip(delta, beta) if b}
            assert len(ratios) == 1
            assert all(d == 0 for d, b in zip(delta, beta) if not b)
