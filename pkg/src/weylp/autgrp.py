"""Automorphisms of A_1 and of its centre Z = K[X, Y], as generator words and
as image pairs.

Generator alphabet (payloads over the coefficient field):

    s        : X -> Y,  Y -> -X          (and x -> d, d -> -x on A_1)
    t_mu     : X -> mu X, Y -> mu^{-1} Y
    gamma_mu : X -> mu X, Y -> Y          (centre only)
    phi_f    : X -> X, Y -> Y + f(X)
    affine   : (X, Y) -> A (X, Y)^T + a   (A in SL_2 for A_1 words)

Words multiply left to right with the convention (a b)(v) = a(b(v)); under it
affine generators satisfy sigma_{A,a} sigma_{B,b} = sigma_{BA, Ba+b}.

decompose() factors an automorphism of Z into the canonical word
gamma_mu t_nu phi_{f_1} s phi_{f_2} s ... phi_{f_n} (gamma omitted when the
jacobian is 1) by leading-form degree reduction: while the degree exceeds 1,
the smaller image's leading form must, up to a scalar power, cancel the
larger's, which peels off a phi (after an s swap when the roles of X and Y
are reversed); the remaining affine part is factored through the generator
relations.  Degree reduction stalling, a singular affine part, or a jacobian
that is not a nonzero constant all prove the input is an endomorphism that is
no automorphism, reported as NotAnAutomorphismError (distinct from malformed
input, which raises ValueError).
"""

from __future__ import annotations

from dataclasses import dataclass

from .gfq import FieldElement, FieldSpec
from .poly import BiPoly, UniPoly, jacobian
from .weyl import WeylElement

A1 = "A1"
Z = "Z"


class NotAnAutomorphismError(ValueError):
    """The input defines an endomorphism but not an automorphism."""


# ----------------------------------------------------------------------
# generators and words


class Generator:
    __slots__ = ()


@dataclass(frozen=True)
class GenS(Generator):
    def __str__(self):
        return "s"


@dataclass(frozen=True)
class GenT(Generator):
    mu: FieldElement

    def __str__(self):
        return "t[%s]" % self.mu


@dataclass(frozen=True)
class GenGamma(Generator):
    mu: FieldElement

    def __str__(self):
        return "gamma[%s]" % self.mu


@dataclass(frozen=True, eq=False)
class GenPhi(Generator):
    payload: UniPoly

    def __eq__(self, other):
        return isinstance(other, GenPhi) and self.payload == other.payload

    def __str__(self):
        return "phi[%s]" % self.payload


@dataclass(frozen=True, eq=False)
class GenAffine(Generator):
    matrix: tuple  # ((a, b), (c, d))
    translation: tuple  # (e, f)

    def __eq__(self, other):
        return (isinstance(other, GenAffine)
                and self.matrix == other.matrix
                and self.translation == other.translation)

    def __str__(self):
        (a, b), (c, d) = self.matrix
        e, f = self.translation
        return "affine[%s,%s,%s,%s;%s,%s]" % (a, b, c, d, e, f)


def _det2(m) -> FieldElement:
    (a, b), (c, d) = m
    return a * d - b * c


def _matmul2(m1, m2):
    (a, b), (c, d) = m1
    (e, f), (g, h) = m2
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _matvec2(m, v):
    (a, b), (c, d) = m
    return (a * v[0] + b * v[1], c * v[0] + d * v[1])


def _inv2(m):
    (a, b), (c, d) = m
    det = _det2(m)
    di = det.inv()
    return ((d * di, -b * di), (-c * di, a * di))


class AutWord:
    """A word over the generator alphabet, tied to a field and a target
    algebra (A1 or Z).  A_1 words never contain gamma and their affine
    matrices have determinant 1."""

    __slots__ = ("field", "target", "gens")

    def __init__(self, field: FieldSpec, target: str, gens):
        if target not in (A1, Z):
            raise ValueError("target must be %r or %r" % (A1, Z))
        self.field = field
        self.target = target
        self.gens = tuple(gens)
        var = "x" if target == A1 else "X"
        one = field.one()
        for gen in self.gens:
            if isinstance(gen, (GenT, GenGamma)):
                if gen.mu.is_zero():
                    raise ValueError("scaling payload must be nonzero")
                if target == A1 and isinstance(gen, GenGamma):
                    raise ValueError("gamma is not an automorphism of A_1")
            elif isinstance(gen, GenPhi):
                if gen.payload.var != var or gen.payload.ring != field:
                    raise ValueError(
                        "phi payload must be a polynomial in %s over %s"
                        % (var, field))
            elif isinstance(gen, GenAffine):
                det = _det2(gen.matrix)
                if det.is_zero():
                    raise ValueError("affine matrix must be invertible")
                if target == A1 and det != one:
                    raise ValueError(
                        "affine matrices on A_1 must have determinant 1")
            elif not isinstance(gen, GenS):
                raise ValueError("unknown generator %r" % (gen,))

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        if not isinstance(other, AutWord):
            return NotImplemented
        return (self.field == other.field and self.target == other.target
                and self.gens == other.gens)

    __hash__ = None

    def __str__(self):
        return " ".join(str(g) for g in self.gens)

    def __repr__(self):
        return "AutWord(%s: %s)" % (self.target, self)


# ----------------------------------------------------------------------
# image pairs


class AutImages:
    """An automorphism (or, when validate=False, a mere endomorphism) given
    by the images of the two algebra generators: BiPoly pair on Z, Weyl
    element pair on A_1."""

    __slots__ = ("field", "target", "img_x", "img_y")

    def __init__(self, field: FieldSpec, target: str, img_x, img_y,
                 validate: bool = True):
        if target not in (A1, Z):
            raise ValueError("target must be %r or %r" % (A1, Z))
        kind = WeylElement if target == A1 else BiPoly
        if not isinstance(img_x, kind) or not isinstance(img_y, kind):
            raise ValueError("%s images must be %s values"
                             % (target, kind.__name__))
        self.field = field
        self.target = target
        self.img_x = img_x
        self.img_y = img_y
        if validate:
            self.validate()

    def validate(self):
        """For Z: the jacobian is a nonzero constant; for A_1: the images
        preserve the defining relation [d, x] = 1."""
        if self.target == Z:
            jac = jacobian(self.img_x, self.img_y)
            if set(jac.coeffs) - {(0, 0)} or jac.is_zero():
                raise NotAnAutomorphismError(
                    "jacobian %s is not a nonzero constant" % jac)
        else:
            one = WeylElement.one(self.field)
            if self.img_y.commutator(self.img_x) != one:
                raise NotAnAutomorphismError(
                    "images do not preserve the relation [d, x] = 1")
        return self

    def jacobian(self) -> BiPoly:
        if self.target != Z:
            raise ValueError("jacobian is defined on Z images")
        return jacobian(self.img_x, self.img_y)

    @property
    def degree(self) -> int:
        d = max(self.img_x.degree, self.img_y.degree)
        return 0 if d == float("-inf") else int(d)

    def __eq__(self, other):
        if not isinstance(other, AutImages):
            return NotImplemented
        return (self.field == other.field and self.target == other.target
                and self.img_x == other.img_x and self.img_y == other.img_y)

    __hash__ = None

    def __str__(self):
        return "(%s; %s)" % (self.img_x, self.img_y)

    def __repr__(self):
        return "AutImages(%s: %s)" % (self.target, self)


def identity_images(field: FieldSpec, target: str) -> AutImages:
    if target == A1:
        return AutImages(field, A1, WeylElement.x_gen(field),
                         WeylElement.d_gen(field), validate=False)
    X, Y = BiPoly.gens(field)
    return AutImages(field, Z, X, Y, validate=False)


def generator_images(gen: Generator, field: FieldSpec, target: str) -> AutImages:
    one = field.one()
    if target == Z:
        X, Y = BiPoly.gens(field)
        if isinstance(gen, GenS):
            return AutImages(field, Z, Y, -X, validate=False)
        if isinstance(gen, GenT):
            return AutImages(field, Z, X.scale(gen.mu), Y.scale(gen.mu.inv()),
                             validate=False)
        if isinstance(gen, GenGamma):
            return AutImages(field, Z, X.scale(gen.mu), Y, validate=False)
        if isinstance(gen, GenPhi):
            f_xy = BiPoly(field, {(e, 0): c
                                  for e, c in gen.payload.coeffs.items()})
            return AutImages(field, Z, X, Y + f_xy, validate=False)
        if isinstance(gen, GenAffine):
            (a, b), (c, d) = gen.matrix
            e, f = gen.translation
            cst = BiPoly.constant
            return AutImages(
                field, Z,
                X.scale(a) + Y.scale(b) + cst(field, e),
                X.scale(c) + Y.scale(d) + cst(field, f), validate=False)
        raise ValueError("unknown generator %r" % (gen,))
    x = WeylElement.x_gen(field)
    d = WeylElement.d_gen(field)
    if isinstance(gen, GenS):
        return AutImages(field, A1, d, -x, validate=False)
    if isinstance(gen, GenT):
        return AutImages(field, A1, x.scale(gen.mu), d.scale(gen.mu.inv()),
                         validate=False)
    if isinstance(gen, GenPhi):
        return AutImages(field, A1, x,
                         d + WeylElement.from_unipoly(gen.payload),
                         validate=False)
    if isinstance(gen, GenAffine):
        (a, b), (c, d2) = gen.matrix
        e, f = gen.translation
        cst = WeylElement.constant
        return AutImages(
            field, A1,
            x.scale(a) + d.scale(b) + cst(field, e),
            x.scale(c) + d.scale(d2) + cst(field, f), validate=False)
    raise ValueError("generator %r is not defined on A_1" % (gen,))


def compose(a: AutImages, b: AutImages) -> AutImages:
    """(a b)(v) = a(b(v)): substitute a's images into b's image polynomials."""
    if a.target != b.target:
        raise ValueError("target mismatch: %s vs %s" % (a.target, b.target))
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.target == Z:
        return AutImages(a.field, Z,
                         b.img_x.substitute(a.img_x, a.img_y),
                         b.img_y.substitute(a.img_x, a.img_y), validate=False)
    imgs = [a.img_x, a.img_y]
    return AutImages(a.field, A1,
                     b.img_x.substitute_gens(imgs),
                     b.img_y.substitute_gens(imgs), validate=False)


def realize(word: AutWord) -> AutImages:
    """Images of a word, composed left to right."""
    acc = identity_images(word.field, word.target)
    for gen in word.gens:
        acc = compose(acc, generator_images(gen, word.field, word.target))
    return acc


def apply_images(a: AutImages, z) -> object:
    """Apply the substitution homomorphism to an algebra element."""
    if a.target == Z:
        if not isinstance(z, BiPoly):
            raise ValueError("Z automorphisms act on BiPoly values")
        return z.substitute(a.img_x, a.img_y)
    if not isinstance(z, WeylElement) or z.n != 1:
        raise ValueError("A_1 automorphisms act on A_1 elements")
    return z.substitute_gens([a.img_x, a.img_y])


def in_gamma(a: AutImages) -> bool:
    """Whether the jacobian is the constant 1."""
    return a.jacobian() == BiPoly.one(a.field)


# ----------------------------------------------------------------------
# word inversion and canonical normalization


def invert_word(word: AutWord) -> AutWord:
    """Reverse the word, inverting generators: s^{-1} = t_{-1} s,
    phi_f^{-1} = phi_{-f}, t and gamma by inverse payload, affine by the
    inverse affine map."""
    out = []
    minus_one = -word.field.one()
    for gen in reversed(word.gens):
        if isinstance(gen, GenS):
            out.append(GenT(minus_one))
            out.append(GenS())
        elif isinstance(gen, GenT):
            out.append(GenT(gen.mu.inv()))
        elif isinstance(gen, GenGamma):
            out.append(GenGamma(gen.mu.inv()))
        elif isinstance(gen, GenPhi):
            out.append(GenPhi(-gen.payload))
        elif isinstance(gen, GenAffine):
            inv = _inv2(gen.matrix)
            t = _matvec2(inv, gen.translation)
            out.append(GenAffine(inv, (-t[0], -t[1])))
        else:
            raise ValueError("unknown generator %r" % (gen,))
    return AutWord(word.field, word.target, out)


def _phi_rescaled(payload: UniPoly, mu: FieldElement, extra: int) -> UniPoly:
    """Payload map behind the scaling relations: lambda X^i picks up
    mu^{-(i + extra)}."""
    mu_inv = mu.inv()
    return UniPoly(payload.ring,
                   {e: c * mu_inv ** (e + extra)
                    for e, c in payload.coeffs.items()}, payload.var)


def normalize_word(word: AutWord) -> AutWord:
    """Rewrite into the canonical shape [gamma] [t] phi s phi s ... using the
    generator relations: merge adjacent like generators, collapse s^2 into
    t_{-1}, and push every t and gamma to the far left (adjusting phi
    payloads and flipping t across s)."""
    field = word.field
    one = field.one()
    gens = list(word.gens)
    changed = True
    guard = 0
    while changed:
        guard += 1
        if guard > 10000:
            raise AssertionError("word normalization did not terminate")
        changed = False
        for i, gen in enumerate(gens):
            if (isinstance(gen, (GenT, GenGamma)) and gen.mu == one) or (
                    isinstance(gen, GenPhi) and gen.payload.is_zero()):
                del gens[i]
                changed = True
                break
        if changed:
            continue
        for i in range(len(gens) - 1):
            a, b = gens[i], gens[i + 1]
            if isinstance(a, GenT) and isinstance(b, GenT):
                gens[i:i + 2] = [GenT(a.mu * b.mu)]
            elif isinstance(a, GenGamma) and isinstance(b, GenGamma):
                gens[i:i + 2] = [GenGamma(a.mu * b.mu)]
            elif isinstance(a, GenPhi) and isinstance(b, GenPhi):
                gens[i:i + 2] = [GenPhi(a.payload + b.payload)]
            elif isinstance(a, GenS) and isinstance(b, GenS):
                gens[i:i + 2] = [GenT(-one)]
            elif isinstance(a, GenS) and isinstance(b, GenT):
                gens[i:i + 2] = [GenT(b.mu.inv()), GenS()]
            elif isinstance(a, GenPhi) and isinstance(b, GenT):
                gens[i:i + 2] = [b, GenPhi(_phi_rescaled(a.payload, b.mu, 1))]
            elif isinstance(a, GenS) and isinstance(b, GenGamma):
                gens[i:i + 2] = [b, GenT(b.mu.inv()), GenS()]
            elif isinstance(a, GenPhi) and isinstance(b, GenGamma):
                gens[i:i + 2] = [b, GenPhi(_phi_rescaled(a.payload, b.mu, 0))]
            elif isinstance(a, GenT) and isinstance(b, GenGamma):
                gens[i:i + 2] = [b, a]
            else:
                continue
            changed = True
            break
    return AutWord(field, word.target, gens)


# ----------------------------------------------------------------------
# tame decomposition


def _leading_scalar(lf_big: BiPoly, lf_small_pow: BiPoly):
    """Scalar c with lf_big = c * lf_small_pow, or None."""
    key = next(iter(lf_small_pow.coeffs))
    base = lf_small_pow.coeffs[key]
    c = lf_big.coeffs.get(key)
    if c is None:
        return None
    c = c * base.inv()
    if lf_big == lf_small_pow.scale(c):
        return c
    return None


def _affine_word(field: FieldSpec, img_x: BiPoly, img_y: BiPoly) -> list:
    """Factor a degree-1 pair of Z images into [gamma] [t] (s/linear-phi
    word); raises NotAnAutomorphismError when the linear part is singular."""
    zero = field.zero()
    one = field.one()
    a, b = img_x.coefficient((1, 0)), img_x.coefficient((0, 1))
    c, d = img_y.coefficient((1, 0)), img_y.coefficient((0, 1))
    e, f = img_x.coefficient((0, 0)), img_y.coefficient((0, 0))
    det = a * d - b * c
    if det.is_zero():
        raise NotAnAutomorphismError("affine part is singular")
    gens: list = []
    if det != one:
        gens.append(GenGamma(det))
        a = a * det.inv()
        c = c * det.inv()
    x_var = UniPoly.variable(field, "X")

    def phi_lin(coef: FieldElement) -> GenPhi:
        return GenPhi(x_var.scale(coef))

    if b.is_zero():
        gens.append(GenT(a))
        if not c.is_zero():
            gens.append(phi_lin(c * a.inv()))
    else:
        gens.append(GenT(b.inv()))
        if not a.is_zero():
            gens.append(phi_lin(a * b))
        gens.append(GenS())
        if not d.is_zero():
            gens.append(phi_lin(d * b.inv()))
    if not e.is_zero():
        # X-translation by e: s phi_{-e} s^{-1}
        gens.extend([GenS(), GenPhi(UniPoly.constant(field, -e, "X")),
                     GenT(-one), GenS()])
    if not f.is_zero():
        gens.append(GenPhi(UniPoly.constant(field, f, "X")))
    return gens


def decompose(a: AutImages) -> AutWord:
    """Canonical word gamma_mu t_nu phi_{f_1} s ... s phi_{f_n} realizing a
    Z-automorphism (gamma omitted when the jacobian is 1; the identity comes
    back as t_1).  Deterministic: ties between the image degrees are broken
    by swapping through s first."""
    if a.target != Z:
        raise ValueError("decompose acts on Z images")
    field = a.field
    jac = a.jacobian()
    if set(jac.coeffs) - {(0, 0)} or jac.is_zero():
        raise NotAnAutomorphismError(
            "jacobian %s is not a nonzero constant" % jac)
    P, Q = a.img_x, a.img_y
    tail: list = []
    while True:
        dp, dq = P.degree, Q.degree
        if dp < 1 or dq < 1:
            raise NotAnAutomorphismError("image is constant")
        if max(dp, dq) <= 1:
            break
        if dp > dq:
            # peel s: sigma = sigma' o s, images of sigma' are (-Q, P)
            P, Q = -Q, P
            tail.insert(0, GenS())
            continue
        if dp == dq:
            P, Q = -Q, P
            tail.insert(0, GenS())
            dp, dq = P.degree, Q.degree
        # reduce Q using powers of P's leading form
        payload = UniPoly.zero(field, "X")
        while Q.degree >= dp and max(dp, Q.degree) > 1:
            dq = Q.degree
            m, rem = divmod(int(dq), int(dp))
            if rem:
                raise NotAnAutomorphismError(
                    "degree reduction stalled: %d does not divide %d"
                    % (int(dp), int(dq)))
            c = _leading_scalar(Q.leading_form(), P.leading_form() ** m)
            if c is None:
                raise NotAnAutomorphismError(
                    "degree reduction stalled: leading forms do not cancel")
            payload = payload + UniPoly.monomial(field, m, c, "X")
            Q = Q - (P ** m).scale(c)
        if payload.is_zero():
            raise NotAnAutomorphismError(
                "degree reduction stalled: no progress")
        tail.insert(0, GenPhi(payload))
    gens = _affine_word(field, P, Q) + tail
    word = normalize_word(AutWord(field, Z, gens))
    if not word.gens:
        word = AutWord(field, Z, [GenT(field.one())])
    return word


def invert(a: AutImages) -> AutImages:
    """Inverse of a Z automorphism, via decomposition."""
    return realize(invert_word(decompose(a)))
