"""Randomized verification suites and the deterministic input generators
behind them.  Each suite runs ``count`` independent cases drawn from a seeded
generator and reports how many passed together with the first failing input
in re-parseable form; the CLI ``fuzz`` command and the acceptance tests are
both built on these.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .autgrp import (A1, Z, AutWord, GenGamma, GenPhi, GenS, GenT,
                     in_gamma, realize)
from .gfq import FieldSpec
from .poly import BiPoly, PolyRing, UniPoly
from .resmap import (a1_affine_images, is_symplectic, res, res_affine,
                     res_inverse, res_n_affine, res_n_affine_bruteforce)
from .theta import theta, theta_inverse, theta_inverse_oracle
from .weyl import (verify_pth_power_identity,
                   verify_pth_power_identity_2vars)


@dataclass
class SuiteReport:
    name: str
    count: int
    passes: int
    failures: list = dataclass_field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return self.passes == self.count

    def summary(self) -> str:
        if self.all_passed:
            return "%d/%d OK" % (self.passes, self.count)
        return "%d/%d OK, %d FAILED; first failure: %s" % (
            self.passes, self.count, self.count - self.passes,
            self.failures[0])


# ----------------------------------------------------------------------
# random input generators (all deterministic in the supplied rng)


def random_unipoly(rng, ring, max_deg: int, var: str = "x") -> UniPoly:
    """Degree uniform in 0..max_deg, dense random coefficients, leading
    coefficient nonzero (degree-0 draws may still be the zero polynomial)."""
    deg = rng.randint(0, max_deg)
    if isinstance(ring, PolyRing):
        coeffs = {e: ring.random_element(rng) for e in range(deg)}
        coeffs[deg] = ring.random_element(rng)
        if deg and coeffs[deg].is_zero():
            coeffs[deg] = ring.one()
        return UniPoly(ring, coeffs, var)
    coeffs = {e: ring.random_element(rng) for e in range(deg)}
    coeffs[deg] = ring.random_nonzero(rng) if deg else ring.random_element(rng)
    return UniPoly(ring, coeffs, var)


def random_xpoly2(rng, spec: FieldSpec, max_deg: int) -> BiPoly:
    """Random polynomial in the commuting generators x1, x2."""
    deg = rng.randint(0, max_deg)
    coeffs = {}
    for i in range(deg + 1):
        for j in range(deg + 1 - i):
            coeffs[(i, j)] = spec.random_element(rng)
    return BiPoly(spec, coeffs, ("x1", "x2"))


def random_word(rng, spec: FieldSpec, target: str, max_len: int = 6,
                max_payload_deg: int = 4) -> AutWord:
    var = "x" if target == A1 else "X"
    gens = []
    for _ in range(rng.randint(1, max_len)):
        kind = rng.randrange(4)
        if kind == 0:
            gens.append(GenS())
        elif kind == 1:
            gens.append(GenT(spec.random_nonzero(rng)))
        else:
            # phi twice as likely as s or t: words with several triangular
            # factors (hence composite degree up to 4^3) stay well covered
            gens.append(GenPhi(random_unipoly(rng, spec, max_payload_deg,
                                              var)))
    return AutWord(spec, target, gens)


def random_sl2(rng, spec: FieldSpec):
    """Product of a few random elementary/diagonal matrices; lands in SL_2."""
    one, zero = spec.one(), spec.zero()
    m = ((one, zero), (zero, one))
    for _ in range(4):
        kind = rng.randrange(3)
        if kind == 0:
            lam = spec.random_element(rng)
            g = ((one, zero), (lam, one))
        elif kind == 1:
            lam = spec.random_element(rng)
            g = ((one, lam), (zero, one))
        else:
            mu = spec.random_nonzero(rng)
            g = ((mu, zero), (zero, mu.inv()))
        m = ((m[0][0] * g[0][0] + m[0][1] * g[1][0],
              m[0][0] * g[0][1] + m[0][1] * g[1][1]),
             (m[1][0] * g[0][0] + m[1][1] * g[1][0],
              m[1][0] * g[0][1] + m[1][1] * g[1][1]))
    return m


def _mat_mul4(m1, m2, spec):
    return tuple(tuple(sum((m1[i][k] * m2[k][j] for k in range(4)),
                           spec.zero()) for j in range(4)) for i in range(4))


def random_symplectic4(rng, spec: FieldSpec, force_correction: bool = False):
    """Random element of Sp_4 as a product of block generators; when
    force_correction is set, starts from a transvection that makes the p=2
    translation correction term nonzero."""
    one, zero = spec.one(), spec.zero()
    ident = tuple(tuple(one if i == j else zero for j in range(4))
                  for i in range(4))
    m = ident
    if force_correction:
        m = ((one, zero, one, zero), (zero, one, zero, zero),
             (zero, zero, one, zero), (zero, zero, zero, one))
    for _ in range(4):
        kind = rng.randrange(3)
        if kind in (0, 1):
            b00 = spec.random_element(rng)
            b01 = spec.random_element(rng)
            b11 = spec.random_element(rng)
            if kind == 0:
                g = ((one, zero, b00, b01), (zero, one, b01, b11),
                     (zero, zero, one, zero), (zero, zero, zero, one))
            else:
                g = ((one, zero, zero, zero), (zero, one, zero, zero),
                     (b00, b01, one, zero), (b01, b11, zero, one))
        else:
            (a, b), (c, d) = random_sl2(rng, spec)
            g = ((a, b, zero, zero), (c, d, zero, zero),
                 (zero, zero, d, -c), (zero, zero, -b, a))
        m = _mat_mul4(m, g, spec)
    return m


def _mat_str(matrix, translation) -> str:
    rows = ";".join(",".join(str(c) for c in row) for row in matrix)
    return "A=[%s] a=(%s)" % (rows, ",".join(str(c) for c in translation))


# ----------------------------------------------------------------------
# suites


def suite_thm17(spec: FieldSpec, count: int, rng) -> SuiteReport:
    """(d + f)^p = d^p + f^{(p-1)} + f^p over the field, deg f <= 3p."""
    report = SuiteReport("thm17", count, 0)
    for _ in range(count):
        f = random_unipoly(rng, spec, 3 * spec.p)
        if verify_pth_power_identity(f):
            report.passes += 1
        else:
            report.failures.append(str(f))
    return report


def suite_thm17_ring(spec: FieldSpec, count: int, rng) -> SuiteReport:
    """The same identity with coefficients in K[t], deg_t <= 3."""
    ring = PolyRing(spec)
    report = SuiteReport("thm17-ring", count, 0)
    for _ in range(count):
        f = random_unipoly(rng, ring, 3 * spec.p)
        if verify_pth_power_identity(f):
            report.passes += 1
        else:
            report.failures.append(str(f))
    return report


def suite_cor22(spec: FieldSpec, count: int, rng) -> SuiteReport:
    """The A_2 analogue on random f(x1, x2), deg <= 6, both axes."""
    report = SuiteReport("cor22", count, 0)
    for _ in range(count):
        f = random_xpoly2(rng, spec, 6)
        axis = rng.randrange(2)
        if verify_pth_power_identity_2vars(f, axis):
            report.passes += 1
        else:
            report.failures.append("axis=%d f=%s" % (axis + 1, f))
    return report


def suite_theta_rt(spec: FieldSpec, count: int, rng) -> SuiteReport:
    """theta round trip, closed form vs oracle, leading-term law."""
    report = SuiteReport("theta-rt", count, 0)
    p = spec.p
    for _ in range(count):
        f = random_unipoly(rng, spec, 3 * p * p)
        g = theta(f)
        ok = theta_inverse(g) == f and theta_inverse_oracle(g) == f
        if ok and not f.is_zero():
            df, cf = f.leading_term()
            dg, cg = g.leading_term()
            ok = dg == p * df and cg == cf ** p
        if ok:
            report.passes += 1
        else:
            report.failures.append(str(f))
    return report


def suite_res_rt(spec: FieldSpec, count: int, rng) -> SuiteReport:
    """res then res_inverse on random A_1 words, with the image invariants."""
    report = SuiteReport("res-rt", count, 0)
    for _ in range(count):
        word = random_word(rng, spec, A1)
        sigma = realize(word)
        try:
            r = res(sigma)
            ok = (in_gamma(r.image) and r.degree_in == r.degree_out
                  and res_inverse(r.image) == sigma)
        except (ValueError, AssertionError):
            ok = False
        if ok:
            report.passes += 1
        else:
            report.failures.append(str(word))
    return report


def suite_res2_affine(spec: FieldSpec, count: int, rng) -> SuiteReport:
    """Closed affine restriction formula vs brute force on SL_2 + shifts."""
    report = SuiteReport("res2-affine", count, 0)
    for _ in range(count):
        matrix = random_sl2(rng, spec)
        translation = (spec.random_element(rng), spec.random_element(rng))
        fast = res_affine(spec, matrix, translation)
        brute = res(a1_affine_images(spec, matrix, translation)).image
        if fast == brute:
            report.passes += 1
        else:
            report.failures.append(_mat_str(matrix, translation))
    return report


def suite_resn_affine(spec: FieldSpec, count: int, rng) -> SuiteReport:
    """Closed affine restriction for A_2 vs brute force on Sp_4 + shifts."""
    report = SuiteReport("resn-affine", count, 0)
    for i in range(count):
        matrix = random_symplectic4(rng, spec, force_correction=(i % 5 == 0))
        translation = tuple(spec.random_element(rng) for _ in range(4))
        if not is_symplectic(matrix, spec):
            report.failures.append(_mat_str(matrix, translation))
            continue
        if (res_n_affine(spec, matrix, translation)
                == res_n_affine_bruteforce(spec, matrix, translation)):
            report.passes += 1
        else:
            report.failures.append(_mat_str(matrix, translation))
    return report


def suite_relations(spec: FieldSpec, count: int, rng) -> SuiteReport:
    """The five generator relations, verified at image level:
    s t_mu = t_{1/mu} s,  s gamma_mu = gamma_mu t_{1/mu} s,
    phi t_mu and phi gamma_mu rescalings,  s^2 = t_{-1}."""
    report = SuiteReport("relations", count, 0)
    one = spec.one()

    def images(*gens):
        return realize(AutWord(spec, Z, list(gens)))

    for _ in range(count):
        mu = spec.random_nonzero(rng)
        lam = spec.random_element(rng)
        i = rng.randint(0, 4)
        phi = GenPhi(UniPoly.monomial(spec, i, lam, "X")
                     if not lam.is_zero() else UniPoly.zero(spec, "X"))
        mu_inv = mu.inv()
        checks = [
            images(GenS(), GenT(mu)) == images(GenT(mu_inv), GenS()),
            images(GenS(), GenGamma(mu))
            == images(GenGamma(mu), GenT(mu_inv), GenS()),
            images(phi, GenT(mu))
            == images(GenT(mu),
                      GenPhi(phi.payload.scale(mu_inv ** (i + 1)))),
            images(phi, GenGamma(mu))
            == images(GenGamma(mu),
                      GenPhi(phi.payload.scale(mu_inv ** i))),
            images(GenS(), GenS()) == images(GenT(-one)),
        ]
        if all(checks):
            report.passes += 1
        else:
            report.failures.append("mu=%s lambda=%s i=%d" % (mu, lam, i))
    return report


SUITES = {
    "thm17": suite_thm17,
    "thm17-ring": suite_thm17_ring,
    "cor22": suite_cor22,
    "theta-rt": suite_theta_rt,
    "res-rt": suite_res_rt,
    "res2-affine": suite_res2_affine,
    "resn-affine": suite_resn_affine,
    "relations": suite_relations,
}


def run_suite(name: str, spec: FieldSpec, count: int, rng) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError("unknown suite %r (choose from %s)"
                         % (name, ", ".join(sorted(SUITES))))
    return fn(spec, count, rng)
