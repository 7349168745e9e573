"""Walk through the minimal-bandwidth classification.

The bandwidth of the one-parameter action obtained by projecting
weights to their i-th simple-root coordinate has a closed formula: the
i-th coordinate of the defining fundamental weight minus that of its
antidominant image.  Minimizing over i classifies the cheapest
one-parameter action for every generalized Grassmannian; this script
recomputes the whole table and then unpacks one row by hand.
"""

from fractions import Fraction

from grassband import (
    GeneralizedGrassmannian,
    antidominant,
    fundamental_weight,
    minimal_bandwidth,
)
from grassband.table1 import computed_rows, diff_table, render_table


def full_table():
    rows = computed_rows(6)
    print(render_table(rows))
    bad = diff_table(6)
    print(f"\nrows differing from the stored golden table: {len(bad)}")


def one_row_by_hand():
    # E6 marked at node 6: the Cayley plane
    X = GeneralizedGrassmannian("E6", 6)
    w = fundamental_weight("E6", 6)
    anti = antidominant("E6", w)
    print(f"\nw_6         = {[str(Fraction(x)) for x in w]}")
    print(f"antidominant = {[str(Fraction(x)) for x in anti]}")
    diffs = [a - b for a, b in zip(w, anti)]
    print(f"coordinate spreads (= per-node bandwidths): {[str(d) for d in diffs]}")
    rep = minimal_bandwidth(X)
    print(f"minimal bandwidth {rep.minimal_value} at nodes {rep.minimizers}")


if __name__ == "__main__":
    full_table()
    one_row_by_hand()
