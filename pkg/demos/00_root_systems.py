"""Tour of the exact root-system layer.

Everything downstream rests on integer/rational combinatorics derived
from the Cartan matrix: positive roots by string saturation,
fundamental weights as columns of the exact inverse, Weyl orbits with
witness words, and the diagram involution induced by the longest
element.
"""

from fractions import Fraction

from grassband import (
    antidominant,
    cartan_matrix,
    fundamental_weight,
    opposition_involution,
    orbit_with_witnesses,
    positive_roots,
    reflect,
)


def cartan_and_roots(name="G2"):
    print(f"Cartan matrix of {name}: {cartan_matrix(name)}")
    roots = positive_roots(name)
    print(f"{len(roots)} positive roots (simple-root coordinates, by height):")
    for r in roots:
        print(f"   {r}")


def exact_weights(name="E6"):
    print(f"\nfundamental weights of {name} (exact rational coordinates):")
    for j in (1, 2, 6):
        coeffs = [str(Fraction(x)) for x in fundamental_weight(name, j)]
        print(f"   w_{j} = {coeffs}")
    sigma = opposition_involution(name)
    print(f"longest-element involution of {name}: {sigma}")
    w1 = fundamental_weight(name, 1)
    print(f"antidominant image of w_1: {[str(Fraction(x)) for x in antidominant(name, w1)]}")


def orbit_tour(name="A3", node=2):
    w = fundamental_weight(name, node)
    orb = orbit_with_witnesses(name, w)
    print(f"\nWeyl orbit of w_{node} in {name}: {len(orb)} weights")
    for elem, word in zip(orb.elements, orb.witnesses):
        coeffs = tuple(str(Fraction(x)) for x in elem)
        print(f"   {coeffs}   via reflections {word or '()'}")
    # replay one witness by hand
    elem, word = orb.elements[0], orb.witnesses[0]
    acc = orb.dominant
    for i in word:
        acc = reflect(name, acc, i)
    assert acc == elem
    print("   (witness words replay to their elements)")


if __name__ == "__main__":
    cartan_and_roots()
    exact_weights()
    orbit_tour()
