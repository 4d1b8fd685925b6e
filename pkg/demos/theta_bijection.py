"""The bijection theta : K[x] -> K[x^p] and its closed-form inverse.

theta(f) = f^p + f^(p-1) is what conjugating d by a triangular automorphism
does to the centre.  It is additive, multiplies degrees by p, and raises
leading coefficients to the p-th power -- so over a perfect field it can be
undone.  Inverting the Frobenius part is easy; the interesting piece is the
derivative correction, which the closed formula absorbs through projection
operators and a locally nilpotent map whose geometric series is finite.
"""

import random

from weylp import (FieldSpec, UniPoly, delta, delta_geometric, theta,
                   theta_inverse, theta_inverse_oracle, xp_components)


def main():
    f2 = FieldSpec(2)
    x = UniPoly.variable(f2)

    print("theta over F_2:")
    for f in (x, x + UniPoly.one(f2), x ** 2, x ** 3 + x):
        print("  theta(%-8s) = %s" % (f, theta(f)))

    print("\nInverting g = x^2 (the answer is not just a p-th root):")
    g = x ** 2
    print("  mu components of g:", [str(m) for m in xp_components(g)])
    print("  theta_inverse(x^2) =", theta_inverse(g))
    print("  check: theta(x+1) =", theta(x + UniPoly.one(f2)))

    print("\nThe locally nilpotent map behind the formula (p=2):")
    h = x ** 12
    print("  delta(x^12) = %s, delta^2 = %s, delta^3 = %s"
          % (delta(h), delta(delta(h)), delta(delta(delta(h)))))
    print("  geometric series sum on x^12: %s" % delta_geometric(h))

    print("\nClosed formula vs degree-by-degree solver on random inputs:")
    rng = random.Random(1)
    for spec in (f2, FieldSpec(3), FieldSpec(5), FieldSpec(2, 2, (1, 1, 1))):
        agree = 0
        for _ in range(100):
            deg = rng.randint(0, 3 * spec.p ** 2)
            f = UniPoly(spec, {e: spec.random_element(rng)
                               for e in range(deg + 1)})
            g = theta(f)
            assert theta_inverse(g) == theta_inverse_oracle(g) == f
            agree += 1
        print("  %-24s %d random roundtrips, closed form == oracle"
              % (spec, agree))

    f4 = FieldSpec(2, 2, (1, 1, 1))
    gx2 = UniPoly.monomial(f4, 2, f4.gen())
    print("\nA case that needs the inverse Frobenius (F_4, g the generator):")
    print("  theta_inverse(g*x^2) = %s" % theta_inverse(gx2))


if __name__ == "__main__":
    main()
