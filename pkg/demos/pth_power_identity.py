"""A walk through the p-th power identity in the Weyl algebra.

Over a commutative ring of characteristic p, the first Weyl algebra
A_1 = K<x, d | dx - xd = 1> has a huge centre: x^p and d^p commute with
everything.  Powers of perturbed derivations collapse accordingly:

    (d + f)^p = d^p + f^(p-1) + f^p        for every f in K[x].

This script computes both sides from scratch (the left by honest
noncommutative multiplication) for a few fields and for K = F_2[t].
"""

import random

from weylp import (FieldSpec, PolyRing, UniPoly, WeylElement,
                   verify_pth_power_identity)


def show(spec, f):
    d = WeylElement.d_gen(f.ring)
    lhs = (d + WeylElement.from_unipoly(f)) ** spec.p
    print("  K = %-24s f = %-12s (d+f)^%d = %s"
          % (spec, f, spec.p, lhs))
    assert verify_pth_power_identity(f)


def main():
    print("The identity (d+f)^p = d^p + f^(p-1) + f^p, term by term:")
    f2 = FieldSpec(2)
    show(f2, UniPoly.variable(f2))
    f3 = FieldSpec(3)
    show(f3, UniPoly.variable(f3) ** 2)
    f4 = FieldSpec(2, 2, (1, 1, 1))
    show(f4, UniPoly.monomial(f4, 1, f4.gen()))

    print("\nRandom sweep over five fields (exact equality every time):")
    rng = random.Random(0)
    for spec in (f2, f3, FieldSpec(5), f4, FieldSpec(3, 2)):
        checked = 0
        for _ in range(50):
            deg = rng.randint(0, 3 * spec.p)
            coeffs = {e: spec.random_element(rng) for e in range(deg + 1)}
            assert verify_pth_power_identity(UniPoly(spec, coeffs))
            checked += 1
        print("  %-24s %d random f verified" % (spec, checked))

    print("\nThe identity needs no field, only a reduced coefficient ring;")
    print("here it is over F_2[t]:")
    ring = PolyRing(f2)
    t = ring.gen()
    f = UniPoly(ring, {2: t, 0: t ** 3 + ring.one()}, "x")
    d = WeylElement.d_gen(ring)
    print("  f = %s" % f)
    print("  (d+f)^2 = %s" % ((d + WeylElement.from_unipoly(f)) ** 2))
    assert verify_pth_power_identity(f)
    print("  identity holds over F_2[t] as well")


if __name__ == "__main__":
    main()
