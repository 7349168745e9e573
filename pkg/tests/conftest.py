import pytest

from grassband import DynkinType


def all_types(max_rank: int):
    """Every valid connected Dynkin type up to the given rank."""
    out = []
    for n in range(1, max_rank + 1):
        out.append(DynkinType("A", n))
    for fam in ("B", "C"):
        for n in range(2, max_rank + 1):
            out.append(DynkinType(fam, n))
    for n in range(3, max_rank + 1):
        out.append(DynkinType("D", n))
    for n in (6, 7, 8):
        if n <= max_rank:
            out.append(DynkinType("E", n))
    if max_rank >= 4:
        out.append(DynkinType("F", 4))
    if max_rank >= 2:
        out.append(DynkinType("G", 2))
    return out


def marked_diagrams(max_rank: int):
    return [(t, j) for t in all_types(max_rank) for j in range(1, t.rank + 1)]


@pytest.fixture(scope="session")
def rank5_cases():
    return marked_diagrams(5)
