"""Sparse polynomial arithmetic over a coefficient ring of characteristic p.

Two shapes: UniPoly (one printing variable, exponent -> coefficient) and
BiPoly (pairs of exponents), plus the characteristic-p tooling everything
above is built from: divided powers d^[k] = d^k/k! via Lucas binomials (exact
even when k! vanishes mod p), the base-p splitting K[x] = sum K[x^p] x^i,
leading terms, and Jacobians of polynomial pairs.

The coefficient ring is either a FieldSpec (elements: FieldElement) or a
PolyRing over one (elements: UniPoly in ``t``), the latter so identities can
be exercised over a reduced coefficient ring that is not a field.  Division
is only ever asked of the field instance.
"""

from __future__ import annotations

from math import comb

from .gfq import FieldElement, FieldSpec

NEG_INF = float("-inf")


def lucas_binomial(m: int, k: int, p: int) -> int:
    """binomial(m, k) mod p by Lucas' theorem (digitwise in base p)."""
    if k < 0 or k > m:
        return 0
    acc = 1
    while k:
        bm, bk = m % p, k % p
        if bk > bm:
            return 0
        acc = (acc * comb(bm, bk)) % p
        m //= p
        k //= p
    return acc % p


def falling_factorial_mod(m: int, k: int, p: int) -> int:
    """m (m-1) ... (m-k+1) mod p, reduced at every step."""
    acc = 1
    for i in range(k):
        acc = (acc * ((m - i) % p)) % p
        if acc == 0:
            return 0
    return acc


class UniPoly:
    """Sparse univariate polynomial; ``var`` is the printing symbol."""

    __slots__ = ("ring", "var", "coeffs")

    def __init__(self, ring, coeffs: dict, var: str = "x"):
        self.ring = ring
        self.var = var
        self.coeffs = {e: c for e, c in coeffs.items() if not c.is_zero()}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring, var: str = "x") -> "UniPoly":
        return cls(ring, {}, var)

    @classmethod
    def one(cls, ring, var: str = "x") -> "UniPoly":
        return cls(ring, {0: ring.one()}, var)

    @classmethod
    def constant(cls, ring, c, var: str = "x") -> "UniPoly":
        return cls(ring, {0: ring.coerce(c)}, var)

    @classmethod
    def monomial(cls, ring, e: int, c, var: str = "x") -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        return cls(ring, {e: ring.coerce(c)}, var)

    @classmethod
    def variable(cls, ring, var: str = "x") -> "UniPoly":
        return cls(ring, {1: ring.one()}, var)

    @classmethod
    def from_coeff_list(cls, ring, coeffs, var: str = "x") -> "UniPoly":
        return cls(ring, {e: ring.coerce(c) for e, c in enumerate(coeffs)}, var)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        return max(self.coeffs) if self.coeffs else NEG_INF

    def leading_term(self):
        """(degree, coefficient) of the highest monomial; error on zero."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading term")
        d = max(self.coeffs)
        return d, self.coeffs[d]

    def coefficient(self, e: int):
        return self.coeffs.get(e, self.ring.zero())

    def _check_compatible(self, other: "UniPoly"):
        if self.ring != other.ring:
            raise ValueError("coefficient ring mismatch")
        if self.var != other.var:
            raise ValueError(
                "variable mismatch: %r vs %r" % (self.var, other.var))

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, UniPoly) or not self._same_kind(other):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            cur = out.get(e)
            out[e] = c if cur is None else cur + c
        return UniPoly(self.ring, out, self.var)

    def __neg__(self):
        return UniPoly(self.ring, {e: -c for e, c in self.coeffs.items()},
                       self.var)

    def __sub__(self, other):
        if not isinstance(other, UniPoly) or not self._same_kind(other):
            return NotImplemented
        return self + (-other)

    def _same_kind(self, other: "UniPoly") -> bool:
        # distinguishes an actual polynomial in our variable from a
        # coefficient value when the coefficient ring is itself PolyRing
        if isinstance(self.ring, PolyRing) and other.var == self.ring.var:
            return False
        return True

    def __mul__(self, other):
        if isinstance(other, UniPoly) and self._same_kind(other):
            self._check_compatible(other)
            return self._mul_poly(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def _mul_poly(self, other: "UniPoly") -> "UniPoly":
        ring = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        acc: dict = {}
        mt = getattr(ring, "_mul", None)
        if mt is not None:
            at = ring._add
            for e1, c1 in a.items():
                row = mt[c1.val]
                for e2, c2 in b.items():
                    e = e1 + e2
                    v = row[c2.val]
                    cur = acc.get(e)
                    acc[e] = v if cur is None else at[cur.val][v.val]
        else:
            for e1, c1 in a.items():
                for e2, c2 in b.items():
                    e = e1 + e2
                    v = c1 * c2
                    cur = acc.get(e)
                    acc[e] = v if cur is None else cur + v
        return UniPoly(ring, acc, self.var)

    def scale(self, c) -> "UniPoly":
        c = self.ring.coerce(c)
        if c.is_zero():
            return UniPoly.zero(self.ring, self.var)
        return UniPoly(self.ring, {e: v * c for e, v in self.coeffs.items()},
                       self.var)

    def __pow__(self, k: int) -> "UniPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = UniPoly.one(self.ring, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return (self.ring == other.ring and self.var == other.var
                and self.coeffs == other.coeffs)

    __hash__ = None

    # -- calculus and base-p structure ----------------------------------

    def derivative(self, k: int = 1) -> "UniPoly":
        """k-th formal derivative."""
        if k < 0:
            raise ValueError("derivative order must be >= 0")
        p = self.ring.characteristic
        out = {}
        for e, c in self.coeffs.items():
            if e >= k:
                f = falling_factorial_mod(e, k, p)
                if f:
                    out[e - k] = c * f if f != 1 else c
        return UniPoly(self.ring, out, self.var)

    def divided_power(self, k: int) -> "UniPoly":
        """d^[k] = d^k / k!: maps x^m to binomial(m, k) x^{m-k} (Lucas mod p)."""
        if k < 0:
            raise ValueError("divided power order must be >= 0")
        p = self.ring.characteristic
        out = {}
        for e, c in self.coeffs.items():
            b = lucas_binomial(e, k, p)
            if b:
                out[e - k] = c * b if b != 1 else c
        return UniPoly(self.ring, out, self.var)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by var^k."""
        if k == 0:
            return self
        return UniPoly(self.ring, {e + k: c for e, c in self.coeffs.items()},
                       self.var)

    def frobenius(self) -> "UniPoly":
        """f -> f^p, i.e. coefficientwise Frobenius with exponents times p."""
        p = self.ring.characteristic
        return UniPoly(self.ring,
                       {e * p: c.frobenius() for e, c in self.coeffs.items()},
                       self.var)

    def inv_frobenius(self) -> "UniPoly":
        """p-th root of a polynomial supported on exponents divisible by p."""
        if not self.ring.is_field:
            raise ValueError("inverse Frobenius needs a perfect field")
        p = self.ring.characteristic
        out = {}
        for e, c in self.coeffs.items():
            if e % p:
                raise ValueError(
                    "exponent %d not divisible by p = %d" % (e, p))
            out[e // p] = c.inv_frobenius()
        return UniPoly(self.ring, out, self.var)

    def p_decompose(self, inner_var: str = "u") -> list["UniPoly"]:
        """Components (a_0, ..., a_{p-1}) with f = sum a_i(x^p) x^i; each a_i
        is returned in a fresh variable standing for x^p."""
        p = self.ring.characteristic
        parts: list[dict] = [{} for _ in range(p)]
        for e, c in self.coeffs.items():
            parts[e % p][e // p] = c
        return [UniPoly(self.ring, part, inner_var) for part in parts]

    def expand_inner(self, var: str = "x") -> "UniPoly":
        """Reinterpret a polynomial in a stand-in for x^p back in x
        (exponents multiplied by p)."""
        p = self.ring.characteristic
        return UniPoly(self.ring, {e * p: c for e, c in self.coeffs.items()},
                       var)

    def substitute(self, value):
        """Evaluate at ``value`` (any element of an algebra over the same
        coefficient ring, e.g. a polynomial or Weyl element)."""
        powers = {0: value ** 0}
        result = None
        for e in sorted(self.coeffs):
            if e not in powers:
                prev = max(k for k in powers if k <= e)
                acc = powers[prev]
                for k in range(prev + 1, e + 1):
                    acc = acc * value
                    powers[k] = acc
            term = powers[e] * self.coeffs[e]
            result = term if result is None else result + term
        if result is None:
            return (value ** 0) * self.ring.zero()
        return result

    # -- printing -------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        one = self.ring.one()
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            parts.append(_format_term(str(c), c == one,
                                      _mono_str(self.var, e)))
        return "+".join(parts)

    def __repr__(self) -> str:
        return "UniPoly(%s)" % self


def _mono_str(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return "%s^%d" % (var, e)


def _format_term(cs: str, is_one: bool, mono: str) -> str:
    compound = any(ch in cs for ch in "+*^")
    if not mono:
        return "(%s)" % cs if compound else cs
    if is_one:
        return mono
    if compound:
        return "(%s)*%s" % (cs, mono)
    return "%s*%s" % (cs, mono)


class BiPoly:
    """Sparse polynomial in two commuting variables."""

    __slots__ = ("ring", "vars", "coeffs")

    def __init__(self, ring, coeffs: dict, vars: tuple[str, str] = ("X", "Y")):
        self.ring = ring
        self.vars = tuple(vars)
        self.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}

    @classmethod
    def zero(cls, ring, vars=("X", "Y")) -> "BiPoly":
        return cls(ring, {}, vars)

    @classmethod
    def one(cls, ring, vars=("X", "Y")) -> "BiPoly":
        return cls(ring, {(0, 0): ring.one()}, vars)

    @classmethod
    def constant(cls, ring, c, vars=("X", "Y")) -> "BiPoly":
        return cls(ring, {(0, 0): ring.coerce(c)}, vars)

    @classmethod
    def gens(cls, ring, vars=("X", "Y")) -> tuple["BiPoly", "BiPoly"]:
        one = ring.one()
        return (cls(ring, {(1, 0): one}, vars), cls(ring, {(0, 1): one}, vars))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Total degree; -inf for 0."""
        return max((i + j for i, j in self.coeffs), default=NEG_INF)

    def coefficient(self, key):
        return self.coeffs.get(tuple(key), self.ring.zero())

    def leading_form(self) -> "BiPoly":
        """Homogeneous component of top total degree."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading form")
        d = self.degree
        return BiPoly(self.ring,
                      {k: c for k, c in self.coeffs.items() if sum(k) == d},
                      self.vars)

    def _check_compatible(self, other: "BiPoly"):
        if self.ring != other.ring:
            raise ValueError("coefficient ring mismatch")
        if self.vars != other.vars:
            raise ValueError(
                "variable mismatch: %r vs %r" % (self.vars, other.vars))

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            cur = out.get(k)
            out[k] = c if cur is None else cur + c
        return BiPoly(self.ring, out, self.vars)

    def __neg__(self):
        return BiPoly(self.ring, {k: -c for k, c in self.coeffs.items()},
                      self.vars)

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            return self.scale(other)
        self._check_compatible(other)
        ring = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        acc: dict = {}
        mt = getattr(ring, "_mul", None)
        if mt is not None:
            at = ring._add
            for (i1, j1), c1 in a.items():
                row = mt[c1.val]
                for (i2, j2), c2 in b.items():
                    k = (i1 + i2, j1 + j2)
                    v = row[c2.val]
                    cur = acc.get(k)
                    acc[k] = v if cur is None else at[cur.val][v.val]
        else:
            for (i1, j1), c1 in a.items():
                for (i2, j2), c2 in b.items():
                    k = (i1 + i2, j1 + j2)
                    v = c1 * c2
                    cur = acc.get(k)
                    acc[k] = v if cur is None else cur + v
        return BiPoly(ring, acc, self.vars)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "BiPoly":
        c = self.ring.coerce(c)
        if c.is_zero():
            return BiPoly.zero(self.ring, self.vars)
        return BiPoly(self.ring, {k: v * c for k, v in self.coeffs.items()},
                      self.vars)

    def __pow__(self, k: int) -> "BiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = BiPoly.one(self.ring, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return (self.ring == other.ring and self.vars == other.vars
                and self.coeffs == other.coeffs)

    __hash__ = None

    def derivative(self, axis: int, k: int = 1) -> "BiPoly":
        """k-th formal partial derivative along axis 0 or 1."""
        p = self.ring.characteristic
        out = {}
        for key, c in self.coeffs.items():
            e = key[axis]
            if e >= k:
                f = falling_factorial_mod(e, k, p)
                if f:
                    nk = (e - k, key[1]) if axis == 0 else (key[0], e - k)
                    cur = out.get(nk)
                    v = c * f if f != 1 else c
                    out[nk] = v if cur is None else cur + v
        return BiPoly(self.ring, out, self.vars)

    def substitute(self, img0, img1):
        """Ring homomorphism sending the two variables to img0, img1."""
        pow0: dict = {0: img0 ** 0}
        pow1: dict = {0: img1 ** 0}

        def power(cache, base, e):
            if e not in cache:
                prev = max(k for k in cache if k <= e)
                acc = cache[prev]
                for _ in range(prev + 1, e + 1):
                    acc = acc * base
                cache[e] = acc
            return cache[e]

        result = None
        for (i, j) in sorted(self.coeffs):
            term = power(pow0, img0, i) * power(pow1, img1, j)
            term = term * self.coeffs[(i, j)]
            result = term if result is None else result + term
        if result is None:
            return (img0 ** 0) * self.ring.zero()
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        one = self.ring.one()
        parts = []
        for key in sorted(self.coeffs, reverse=True):
            c = self.coeffs[key]
            mono = "*".join(m for m in (_mono_str(self.vars[0], key[0]),
                                        _mono_str(self.vars[1], key[1])) if m)
            parts.append(_format_term(str(c), c == one, mono))
        return "+".join(parts)

    def __repr__(self) -> str:
        return "BiPoly(%s)" % self


def jacobian(P: BiPoly, Q: BiPoly) -> BiPoly:
    """det of the matrix of formal partials: P_X Q_Y - P_Y Q_X."""
    P._check_compatible(Q)
    return (P.derivative(0) * Q.derivative(1)
            - P.derivative(1) * Q.derivative(0))


def p_recompose(parts: list[UniPoly], var: str = "x") -> UniPoly:
    """Inverse of p_decompose: sum a_i(x^p) x^i."""
    result = UniPoly.zero(parts[0].ring, var)
    for i, part in enumerate(parts):
        result = result + part.expand_inner(var).shift(i)
    return result


class PolyRing:
    """K[t] over a finite field, used as a coefficient ring that is a reduced
    commutative algebra but not a field.  Elements are UniPoly in ``t``."""

    is_field = False

    def __init__(self, base: FieldSpec, var: str = "t"):
        self.base = base
        self.var = var

    @property
    def characteristic(self) -> int:
        return self.base.p

    def zero(self) -> UniPoly:
        return UniPoly.zero(self.base, self.var)

    def one(self) -> UniPoly:
        return UniPoly.one(self.base, self.var)

    def gen(self) -> UniPoly:
        return UniPoly.variable(self.base, self.var)

    def from_int(self, k: int) -> UniPoly:
        return UniPoly.constant(self.base, self.base.from_int(k), self.var)

    def coerce(self, value) -> UniPoly:
        if isinstance(value, UniPoly):
            if value.ring != self.base or value.var != self.var:
                raise ValueError("coefficient ring mismatch")
            return value
        if isinstance(value, FieldElement):
            return UniPoly.constant(self.base, value, self.var)
        if isinstance(value, int):
            return self.from_int(value)
        raise TypeError("cannot coerce %r into %s" % (value, self))

    def random_element(self, rng, max_deg: int = 3) -> UniPoly:
        deg = rng.randint(0, max_deg)
        coeffs = {e: self.base.random_element(rng) for e in range(deg)}
        if deg:
            coeffs[deg] = self.base.random_nonzero(rng)
        else:
            coeffs[0] = self.base.random_element(rng)
        return UniPoly(self.base, coeffs, self.var)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyRing):
            return NotImplemented
        return self.base == other.base and self.var == other.var

    def __hash__(self) -> int:
        return hash((self.base, self.var))

    def __str__(self) -> str:
        return "(%s)[%s]" % (self.base, self.var)

    __repr__ = __str__
