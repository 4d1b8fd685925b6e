"""The restriction of A_1 automorphisms to the centre Z = K[x^p, d^p], its
affine closed form, its inverse, and the affine analogue for A_2.

res always brute-forces the p-th powers of the images (sigma(X) = sigma(x)^p,
sigma(Y) = sigma(d)^p, converted to centre coordinates after a centrality
check); the closed affine formula and the phi rule are cross-checks, never a
fast path.  The image lands in the jacobian-1 subgroup and preserves degree;
both facts are asserted on every call.

The inverse goes the way the canonical words suggest: decompose the centre
automorphism into t_nu phi_{f_1} s ... phi_{f_n}, then pull each generator
back (t by the p-th root of its payload, phi by the theta-preimage of its
payload, s by itself) and realize the resulting word on A_1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .autgrp import (A1, Z, AutImages, AutWord, GenGamma, GenPhi, GenS, GenT,
                     decompose, in_gamma, realize)
from .gfq import FieldElement, FieldSpec
from .poly import BiPoly, UniPoly
from .weyl import WeylElement


@dataclass
class ResResult:
    """Restriction of an A_1 automorphism: the centre images plus the checked
    invariants (jacobian constant 1, degree preserved)."""

    image: AutImages
    jacobian_value: FieldElement
    degree_in: int
    degree_out: int


def res(a: AutImages) -> ResResult:
    """Restrict an A_1 automorphism to the centre by brute-force p-th powers."""
    if a.target != A1:
        raise ValueError("res acts on A_1 automorphisms")
    a.validate()
    field = a.field
    p = field.p
    pow_x = a.img_x ** p
    pow_y = a.img_y ** p
    # centrality is forced for genuine automorphisms; a failure here means
    # the input was no automorphism after all
    img_x = pow_x.to_center()
    img_y = pow_y.to_center()
    image = AutImages(field, Z, img_x, img_y)
    jac = image.jacobian()
    jac_value = jac.coefficient((0, 0))
    if jac != BiPoly.one(field):
        raise AssertionError("restriction left the jacobian-1 subgroup")
    d_in, d_out = a.degree, image.degree
    if d_in != d_out:
        raise AssertionError("restriction changed the degree: %d -> %d"
                             % (d_in, d_out))
    return ResResult(image, jac_value, d_in, d_out)


def a1_affine_images(field: FieldSpec, matrix, translation) -> AutImages:
    """The affine A_1 automorphism (x, d) -> A (x, d)^T + a; det A must be 1."""
    (a, b), (c, d) = matrix
    e, f = translation
    one = field.one()
    if a * d - b * c != one:
        raise ValueError("affine matrices on A_1 must have determinant 1")
    x = WeylElement.x_gen(field)
    dd = WeylElement.d_gen(field)
    cst = WeylElement.constant
    return AutImages(field, A1,
                     x.scale(a) + dd.scale(b) + cst(field, e),
                     x.scale(c) + dd.scale(d) + cst(field, f))


def z_affine_images(field: FieldSpec, matrix, translation) -> AutImages:
    (a, b), (c, d) = matrix
    e, f = translation
    X, Y = BiPoly.gens(field)
    cst = BiPoly.constant
    return AutImages(field, Z,
                     X.scale(a) + Y.scale(b) + cst(field, e),
                     X.scale(c) + Y.scale(d) + cst(field, f))


def res_affine(field: FieldSpec, matrix, translation) -> AutImages:
    """Closed form of the restriction on affine automorphisms: entrywise p-th
    powers, with the extra translation term (e^2+ab, f^2+cd) when p = 2."""
    (a, b), (c, d) = matrix
    e, f = translation
    if a * d - b * c != field.one():
        raise ValueError("affine matrices on A_1 must have determinant 1")
    p = field.p
    mat_p = ((a ** p, b ** p), (c ** p, d ** p))
    if p == 2:
        tr_p = (e * e + a * b, f * f + c * d)
    else:
        tr_p = (e ** p, f ** p)
    return z_affine_images(field, mat_p, tr_p)


def res_phi(f: UniPoly) -> UniPoly:
    """Payload rule for triangular automorphisms: res(phi_f) = phi_{g} with
    g the theta image of f written in X (exponent/p)."""
    from .theta import theta
    return _to_X(theta(f))


def _to_X(g: UniPoly) -> UniPoly:
    """Rewrite a polynomial in x with support in pZ as a polynomial in X."""
    p = g.ring.characteristic
    out = {}
    for e, c in g.coeffs.items():
        if e % p:
            raise ValueError("exponent %d not divisible by %d" % (e, p))
        out[e // p] = c
    return UniPoly(g.ring, out, "X")


def _to_x(f: UniPoly) -> UniPoly:
    """Rewrite a polynomial in X as the polynomial in x it stands for."""
    p = f.ring.characteristic
    return UniPoly(f.ring, {e * p: c for e, c in f.coeffs.items()}, "x")


def res_inverse(g: AutImages) -> AutImages:
    """Preimage of a jacobian-1 centre automorphism under res: decompose,
    map t_nu -> t_{nu^{1/p}}, phi_f -> phi_{theta^{-1}(f)}, s -> s, realize
    on A_1."""
    from .theta import theta_inverse
    if g.target != Z:
        raise ValueError("res_inverse acts on centre automorphisms")
    if not in_gamma(g):
        raise ValueError(
            "not in the image of res: jacobian is %s, not 1" % g.jacobian())
    word = decompose(g)
    gens = []
    for gen in word.gens:
        if isinstance(gen, GenS):
            gens.append(GenS())
        elif isinstance(gen, GenT):
            gens.append(GenT(gen.mu.inv_frobenius()))
        elif isinstance(gen, GenPhi):
            gens.append(GenPhi(theta_inverse(_to_x(gen.payload))))
        elif isinstance(gen, GenGamma):
            raise AssertionError("gamma in a jacobian-1 decomposition")
        else:
            raise AssertionError("unexpected generator %r" % (gen,))
    return realize(AutWord(g.field, A1, gens))


# ----------------------------------------------------------------------
# the affine story for A_2


def symplectic_form(field: FieldSpec, n: int = 2):
    """Gram matrix of the commutator form on the 2n generators of A_n:
    [x_{n+i}, x_i] = 1 pairs position n+i against i."""
    zero, one = field.zero(), field.one()
    size = 2 * n
    form = [[zero] * size for _ in range(size)]
    for i in range(n):
        form[i][n + i] = -one
        form[n + i][i] = one
    return tuple(tuple(row) for row in form)


def _mat_mul(m1, m2, field):
    size = len(m1)
    zero = field.zero()
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = zero
            for k in range(size):
                acc = acc + m1[i][k] * m2[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _transpose(m):
    return tuple(tuple(m[j][i] for j in range(len(m))) for i in range(len(m)))


def is_symplectic(matrix, field: FieldSpec) -> bool:
    """A^T J A = J for the commutator form J."""
    n2 = len(matrix)
    if n2 % 2 or any(len(row) != n2 for row in matrix):
        return False
    form = symplectic_form(field, n2 // 2)
    return _mat_mul(_mat_mul(_transpose(matrix), form, field),
                    matrix, field) == form


def res_n_affine(field: FieldSpec, matrix, translation):
    """Closed form of the restriction of an affine A_n automorphism
    x_i -> sum_j A_ij x_j + a_i (A symplectic): entrywise p-th powers, and
    for p = 2 the translation picks up a_i^2 + sum_{j<=n} A_ij A_{i,n+j}.
    Returns the (matrix, translation) pair of the affine centre automorphism."""
    matrix = tuple(tuple(row) for row in matrix)
    translation = tuple(translation)
    if not is_symplectic(matrix, field):
        raise ValueError("matrix is not symplectic for the commutator form")
    p = field.p
    size = len(matrix)
    n = size // 2
    mat_p = tuple(tuple(c ** p for c in row) for row in matrix)
    if p == 2:
        tr_p = []
        for i in range(size):
            corr = field.zero()
            for j in range(n):
                corr = corr + matrix[i][j] * matrix[i][n + j]
            tr_p.append(translation[i] ** 2 + corr)
        tr_p = tuple(tr_p)
    else:
        tr_p = tuple(c ** p for c in translation)
    return mat_p, tr_p


def res_n_affine_bruteforce(field: FieldSpec, matrix, translation):
    """The same restriction computed honestly: build each affine image in
    A_n, take its p-th power, check it is central and affine in the centre
    generators X_j = x_j^p, and read off the coefficient rows."""
    matrix = tuple(tuple(row) for row in matrix)
    translation = tuple(translation)
    size = len(matrix)
    if size not in (2, 4):
        raise ValueError("only A_1 and A_2 are supported")
    n = size // 2
    p = field.p
    gens = ([WeylElement.x_gen(field, a, n) for a in range(n)]
            + [WeylElement.d_gen(field, a, n) for a in range(n)])
    rows = []
    trans = []
    for i in range(size):
        w = WeylElement.constant(field, translation[i], n)
        for j in range(size):
            w = w + gens[j].scale(matrix[i][j])
        wp = w ** p
        if not wp.is_central():
            raise AssertionError("p-th power of an affine image not central")
        row = [field.zero()] * size
        const = field.zero()
        for key, c in wp.coeffs.items():
            divided = tuple(e // p for e in key)
            total = sum(divided)
            if total == 0:
                const = c
            elif total == 1:
                row[divided.index(1)] = c
            else:
                raise AssertionError("affine restriction is not affine")
        rows.append(tuple(row))
        trans.append(const)
    return tuple(rows), tuple(trans)
