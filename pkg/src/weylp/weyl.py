"""Normal-form arithmetic in the Weyl algebra A_n (n = 1 or 2) over a
coefficient ring of characteristic p, with the relations [d_i, x_i] = 1 and
all other generator pairs commuting.

Elements are stored in normal order (all x's left of all d's) as a sparse map
from exponent vectors (i_1..i_n, j_1..j_n) to coefficients.  Products are
computed through the closed commutation rule

    d^j x^i = sum_k binom(j,k) * i!/(i-k)! * x^{i-k} d^{j-k},

evaluated in aggregate as  A*B = sum_{k < p} k! * (d/d_xi)^[k]A * (d/dx)^[k]B
over commutative normal symbols (binom(j,k)*binom(i,k)*k! equals the falling
factorial form, and k! kills every k >= p).  A term-by-term rewriting
multiplier lives in the test suite as an independent oracle for this routine.

The module also hosts the brute-force checks of the p-th power identity
(d + f)^p = d^p + f^{(p-1)} + f^p, in A_1 over fields and over K[t], and its
two-variable analogue in A_2.
"""

from __future__ import annotations

from itertools import product as _iterproduct

from .poly import BiPoly, UniPoly, lucas_binomial

NEG_INF = float("-inf")


class WeylElement:
    """Normal-form element of A_n; keys are (i_1..i_n, j_1..j_n)."""

    __slots__ = ("ring", "n", "coeffs")

    def __init__(self, ring, coeffs: dict, n: int = 1):
        if n not in (1, 2):
            raise ValueError("only A_1 and A_2 are supported")
        self.ring = ring
        self.n = n
        self.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, ring, n: int = 1) -> "WeylElement":
        return cls(ring, {}, n)

    @classmethod
    def one(cls, ring, n: int = 1) -> "WeylElement":
        return cls(ring, {(0,) * (2 * n): ring.one()}, n)

    @classmethod
    def constant(cls, ring, c, n: int = 1) -> "WeylElement":
        return cls(ring, {(0,) * (2 * n): ring.coerce(c)}, n)

    @classmethod
    def monomial(cls, ring, key, c, n: int = 1) -> "WeylElement":
        key = tuple(key)
        if len(key) != 2 * n or any(e < 0 for e in key):
            raise ValueError("bad exponent vector %r" % (key,))
        return cls(ring, {key: ring.coerce(c)}, n)

    @classmethod
    def x_gen(cls, ring, axis: int = 0, n: int = 1) -> "WeylElement":
        key = [0] * (2 * n)
        key[axis] = 1
        return cls(ring, {tuple(key): ring.one()}, n)

    @classmethod
    def d_gen(cls, ring, axis: int = 0, n: int = 1) -> "WeylElement":
        key = [0] * (2 * n)
        key[n + axis] = 1
        return cls(ring, {tuple(key): ring.one()}, n)

    @classmethod
    def from_unipoly(cls, f: UniPoly) -> "WeylElement":
        """Embed f(x) into A_1."""
        return cls(f.ring, {(e, 0): c for e, c in f.coeffs.items()}, 1)

    @classmethod
    def from_xpoly2(cls, f: BiPoly) -> "WeylElement":
        """Embed f(x_1, x_2) into A_2."""
        return cls(f.ring,
                   {(i, j, 0, 0): c for (i, j), c in f.coeffs.items()}, 2)

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Total degree in all generators; -inf for 0."""
        return max((sum(k) for k in self.coeffs), default=NEG_INF)

    def coefficient(self, key):
        return self.coeffs.get(tuple(key), self.ring.zero())

    def _check_compatible(self, other: "WeylElement"):
        if self.ring != other.ring:
            raise ValueError("coefficient ring mismatch")
        if self.n != other.n:
            raise ValueError("mixing A_%d and A_%d" % (self.n, other.n))

    # -- additive operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            cur = out.get(k)
            out[k] = c if cur is None else cur + c
        return WeylElement(self.ring, out, self.n)

    def __neg__(self):
        return WeylElement(self.ring, {k: -c for k, c in self.coeffs.items()},
                           self.n)

    def __sub__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "WeylElement":
        c = self.ring.coerce(c)
        if c.is_zero():
            return WeylElement.zero(self.ring, self.n)
        return WeylElement(self.ring,
                           {k: v * c for k, v in self.coeffs.items()}, self.n)

    def __rmul__(self, other):
        return self.scale(other)

    # -- multiplication -----------------------------------------------------

    def _divided_derivative(self, k: tuple, on_x: bool) -> dict:
        """Divided partial derivative d^[k] in the x-block (on_x) or d-block
        of the normal symbol; drops terms whose Lucas binomial vanishes."""
        p = self.ring.characteristic
        n = self.n
        off = 0 if on_x else n
        out: dict = {}
        for key, c in self.coeffs.items():
            factor = 1
            new = list(key)
            ok = True
            for a in range(n):
                ka = k[a]
                if ka == 0:
                    continue
                e = key[off + a]
                b = lucas_binomial(e, ka, p)
                if b == 0:
                    ok = False
                    break
                factor = (factor * b) % p
                new[off + a] = e - ka
            if not ok or factor == 0:
                continue
            v = c * factor if factor != 1 else c
            nk = tuple(new)
            cur = out.get(nk)
            out[nk] = v if cur is None else cur + v
        return out

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return self.scale(other)
        self._check_compatible(other)
        ring = self.ring
        p = ring.characteristic
        n = self.n
        if not self.coeffs or not other.coeffs:
            return WeylElement.zero(ring, n)
        # per-axis caps: self only differentiates in d's, other in x's
        max_j = [max(k[n + a] for k in self.coeffs) for a in range(n)]
        max_i = [max(k[a] for k in other.coeffs) for a in range(n)]
        caps = [min(p - 1, max_j[a], max_i[a]) for a in range(n)]
        fact = [1] * p
        for m in range(2, p):
            fact[m] = (fact[m - 1] * m) % p
        acc: dict = {}
        mt = getattr(ring, "_mul", None)
        at = getattr(ring, "_add", None)
        for k in _iterproduct(*(range(c + 1) for c in caps)):
            scalar = 1
            for a in range(n):
                scalar = (scalar * fact[k[a]]) % p
            if scalar == 0:
                continue
            A = self._divided_derivative(k, on_x=False)
            if not A:
                continue
            B = other._divided_derivative(k, on_x=True)
            if not B:
                continue
            if scalar != 1:
                sc = ring.from_int(scalar)
                A = {key: c * sc for key, c in A.items()}
            if mt is not None:
                for k1, c1 in A.items():
                    row = mt[c1.val]
                    for k2, c2 in B.items():
                        key = tuple(a + b for a, b in zip(k1, k2))
                        v = row[c2.val]
                        cur = acc.get(key)
                        acc[key] = v if cur is None else at[cur.val][v.val]
            else:
                for k1, c1 in A.items():
                    for k2, c2 in B.items():
                        key = tuple(a + b for a, b in zip(k1, k2))
                        v = c1 * c2
                        cur = acc.get(key)
                        acc[key] = v if cur is None else cur + v
        return WeylElement(ring, acc, n)

    def __pow__(self, k: int) -> "WeylElement":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = WeylElement.one(self.ring, self.n)
        for _ in range(k):
            result = result * self
        return result

    def commutator(self, other: "WeylElement") -> "WeylElement":
        return self * other - other * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return (self.ring == other.ring and self.n == other.n
                and self.coeffs == other.coeffs)

    __hash__ = None

    # -- centre ---------------------------------------------------------

    def is_central(self) -> bool:
        """Commutes with every generator.  Decided by the support criterion
        (all exponents divisible by p) and cross-checked against actual
        commutators; the two must agree."""
        p = self.ring.characteristic
        by_support = all(e % p == 0 for key in self.coeffs for e in key)
        gens = ([WeylElement.x_gen(self.ring, a, self.n) for a in range(self.n)]
                + [WeylElement.d_gen(self.ring, a, self.n) for a in range(self.n)])
        by_commutators = all(self.commutator(g).is_zero() for g in gens)
        if by_support != by_commutators:
            raise AssertionError(
                "centrality criteria disagree on %s" % self)
        return by_support

    def to_center(self) -> BiPoly:
        """Coordinates of a central element of A_1 in the centre K[X, Y],
        X = x^p, Y = d^p (exponent division, since x^{pa} d^{pb} is already
        in normal order)."""
        if self.n != 1:
            raise ValueError("to_center is defined for A_1 only")
        if not self.is_central():
            raise ValueError("element is not central")
        p = self.ring.characteristic
        return BiPoly(self.ring,
                      {(i // p, j // p): c
                       for (i, j), c in self.coeffs.items()})

    def substitute_gens(self, images: list["WeylElement"]) -> "WeylElement":
        """Apply the homomorphism sending generator k to images[k]
        (x-generators first, then d-generators)."""
        if len(images) != 2 * self.n:
            raise ValueError("need %d generator images" % (2 * self.n))
        caches = [{0: WeylElement.one(img.ring, img.n)} for img in images]

        def power(idx, e):
            cache = caches[idx]
            if e not in cache:
                prev = max(k for k in cache if k <= e)
                acc = cache[prev]
                for _ in range(prev + 1, e + 1):
                    acc = acc * images[idx]
                cache[e] = acc
            return cache[e]

        result = None
        for key in sorted(self.coeffs):
            term = None
            for idx, e in enumerate(key):
                if e:
                    pw = power(idx, e)
                    term = pw if term is None else term * pw
            if term is None:
                term = WeylElement.one(images[0].ring, images[0].n)
            term = term.scale(self.coeffs[key])
            result = term if result is None else result + term
        if result is None:
            return WeylElement.zero(images[0].ring, images[0].n)
        return result

    # -- printing ---------------------------------------------------------

    def _var_names(self) -> list[str]:
        if self.n == 1:
            return ["x", "d"]
        return ["x1", "x2", "d1", "d2"]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        from .poly import _format_term, _mono_str
        names = self._var_names()
        one = self.ring.one()
        parts = []
        for key in sorted(self.coeffs, reverse=True):
            c = self.coeffs[key]
            mono = "*".join(m for m in (_mono_str(v, e)
                                        for v, e in zip(names, key)) if m)
            parts.append(_format_term(str(c), c == one, mono))
        return "+".join(parts)

    def __repr__(self) -> str:
        return "WeylElement(%s)" % self


def verify_pth_power_identity(f: UniPoly) -> bool:
    """Brute-force check in A_1 that (d + f)^p = d^p + f^{(p-1)} + f^p, and
    the equivalent form d^p - a_{p-1}(x^p) + f^p where a_{p-1} is the top
    component of the base-p splitting of f.  Works over any coefficient ring
    of characteristic p (field or K[t])."""
    ring = f.ring
    p = ring.characteristic
    d = WeylElement.d_gen(ring)
    lhs = (d + WeylElement.from_unipoly(f)) ** p
    f_to_p = f ** p
    der = f.derivative(p - 1)
    rhs = d ** p + WeylElement.from_unipoly(der) + WeylElement.from_unipoly(f_to_p)
    top = f.p_decompose()[p - 1].expand_inner(f.var)
    rhs_top_form = (d ** p - WeylElement.from_unipoly(top)
                    + WeylElement.from_unipoly(f_to_p))
    return lhs == rhs and lhs == rhs_top_form and der == -top


def verify_pth_power_identity_2vars(f: BiPoly, axis: int) -> bool:
    """The A_2 analogue: (d_i + f)^p = d_i^p + (d/dx_i)^{p-1} f + f^p for f a
    polynomial in the two commuting x-generators."""
    if axis not in (0, 1):
        raise ValueError("axis must be 0 or 1")
    ring = f.ring
    p = ring.characteristic
    d = WeylElement.d_gen(ring, axis, n=2)
    lhs = (d + WeylElement.from_xpoly2(f)) ** p
    rhs = (d ** p + WeylElement.from_xpoly2(f.derivative(axis, p - 1))
           + WeylElement.from_xpoly2(f ** p))
    return lhs == rhs
