"""The restriction map: automorphisms of A_1 acting on the centre.

In characteristic p the centre of A_1 is the polynomial ring Z = K[X, Y]
with X = x^p, Y = d^p.  Every automorphism of A_1 restricts to an
automorphism of Z with jacobian 1 and the same degree; over a perfect field
that restriction is a bijection onto the jacobian-1 subgroup, and its inverse
is computable: decompose the plane automorphism into a canonical word in
scalings, the symplectic swap s and triangular maps, then pull each factor
back (p-th roots for scalings, theta-preimages for triangular payloads).
"""

import random

from weylp import (A1, AutWord, FieldSpec, GenPhi, GenS, GenT, UniPoly,
                   compose, decompose, in_gamma, realize, res, res_inverse)
from weylp.suites import random_word


def main():
    f3 = FieldSpec(3)
    two = f3.from_int(2)

    print("Restriction of the basic generators (p=3):")
    for name, word in [("s", AutWord(f3, A1, [GenS()])),
                       ("t_2", AutWord(f3, A1, [GenT(two)])),
                       ("phi_{x^2}", AutWord(f3, A1,
                                             [GenPhi(UniPoly.variable(f3) ** 2)]))]:
        sigma = realize(word)
        r = res(sigma)
        print("  %-10s -> %-28s degree %d -> %d, jacobian %s"
              % (name, r.image, r.degree_in, r.degree_out, r.jacobian_value))

    print("\nA composite automorphism and its canonical word:")
    word = AutWord(f3, A1, [GenT(two), GenPhi(UniPoly.variable(f3) ** 2),
                            GenS(), GenPhi(UniPoly.variable(f3))])
    sigma = realize(word)
    r = res(sigma)
    print("  sigma      = %s" % sigma)
    print("  res(sigma) = %s" % r.image)
    print("  decompose(res(sigma)) = %s" % decompose(r.image))
    back = res_inverse(r.image)
    print("  res_inverse recovers sigma:", back == sigma)

    print("\nRound trips on random words (p = 2 and 3):")
    rng = random.Random(7)
    for p in (2, 3):
        spec = FieldSpec(p)
        n = 0
        for _ in range(25):
            sigma = realize(random_word(rng, spec, A1))
            r = res(sigma)
            assert in_gamma(r.image) and r.degree_in == r.degree_out
            assert res_inverse(r.image) == sigma
            n += 1
        print("  p=%d: %d words restricted and pulled back exactly" % (p, n))

    print("\nres is a group homomorphism:")
    a = realize(random_word(rng, f3, A1, max_len=3, max_payload_deg=2))
    b = realize(random_word(rng, f3, A1, max_len=3, max_payload_deg=2))
    lhs = res(compose(a, b)).image
    rhs = compose(res(a).image, res(b).image)
    print("  res(a b) == res(a) res(b):", lhs == rhs)


if __name__ == "__main__":
    main()
