"""Shared test helpers, including the slow rewriting multiplier that serves
as an independent oracle for WeylElement multiplication."""

from __future__ import annotations

from functools import lru_cache

from weylp import FieldSpec, UniPoly, WeylElement


@lru_cache(maxsize=None)
def _normal_form_dxi(j: int, i: int) -> tuple:
    """Normal form of d^j x^i as ((i', j'), integer coefficient) pairs,
    computed purely by the one-step rewrite d x = x d + 1:
    d^j x^i = x * d^j x^{i-1} + j * d^{j-1} x^{i-1}."""
    if j == 0 or i == 0:
        return (((i, j), 1),)
    out: dict = {}
    for (a, b), c in _normal_form_dxi(j, i - 1):
        key = (a + 1, b)
        out[key] = out.get(key, 0) + c
    if j >= 1:
        for (a, b), c in _normal_form_dxi(j - 1, i - 1):
            out[(a, b)] = out.get((a, b), 0) + j * c
    return tuple(out.items())


def mul_by_rewriting(lhs: WeylElement, rhs: WeylElement) -> WeylElement:
    """Term-by-term normal-ordering product for A_1; independent of the
    closed commutation formula used by WeylElement.__mul__."""
    assert lhs.n == 1 and rhs.n == 1
    ring = lhs.ring
    acc: dict = {}
    for (i1, j1), c1 in lhs.coeffs.items():
        for (i2, j2), c2 in rhs.coeffs.items():
            base = c1 * c2
            for (a, b), c in _normal_form_dxi(j1, i2):
                key = (i1 + a, b + j2)
                v = base * c if c != 1 else base
                cur = acc.get(key)
                acc[key] = v if cur is None else cur + v
    return WeylElement(ring, acc, 1)


def random_unipoly_exact(rng, spec: FieldSpec, deg: int,
                         var: str = "x") -> UniPoly:
    coeffs = {e: spec.random_element(rng) for e in range(deg)}
    coeffs[deg] = spec.random_nonzero(rng) if deg else spec.random_element(rng)
    return UniPoly(spec, coeffs, var)
