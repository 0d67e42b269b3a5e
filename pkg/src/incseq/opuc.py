"""Monic orthogonal polynomials on the unit circle over exact rings.

Polynomials are coefficient lists (constant term first) with entries in
the coefficient ring of the moments: Fractions, truncated series in t,
or MultiPoly elements with unit constant term.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as F
from functools import lru_cache
from math import comb
from typing import Callable

from .exact import LaurentPoly, MultiPoly, PolyRing, TruncatedSeries, _nonzero
from .integrals import (LaurentSeries, bessel_I, diagonal_ring, exp_tz,
                        integral_det, series_to_poly, value_at)


class DegeneracyError(ArithmeticError):
    pass


def _is_unit(x) -> bool:
    if hasattr(x, "is_unit"):
        return x.is_unit()
    return x != 0


# ---------------------------------------------------------------------------
# polynomial helpers on coefficient lists


def padd(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def pscale(p, c):
    return [a * c for a in p]


def pshift(p, k=1):
    """z^k p(z)."""
    return [0] * k + list(p)


def reversed_poly(p, deg=None):
    """p*(z) = z^deg p(1/z)."""
    deg = len(p) - 1 if deg is None else deg
    q = list(p) + [0] * (deg + 1 - len(p))
    return q[::-1]


def pval(p, x):
    out = 0
    for a in reversed(p):
        out = out * x + a
    return out


def to_laurent(p) -> LaurentPoly:
    return LaurentPoly({k: a for k, a in enumerate(p)})


def pmul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not _nonzero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def eval_poly(p, x: MultiPoly, ring: PolyRing) -> MultiPoly:
    """p(x) for series coefficients, embedded in ``ring``."""
    out = ring.zero()
    for a in reversed(p):
        a = series_to_poly(a, ring) if isinstance(a, TruncatedSeries) else ring.const(a)
        out = out * x + a
    return out


def eval_reversed(p, x: MultiPoly, ring: PolyRing) -> MultiPoly:
    return eval_poly(reversed_poly(p), x, ring)


# ---------------------------------------------------------------------------
# unit circle


@dataclass
class OPUCData:
    moments: Callable[[int], object]
    pi: list = field(default_factory=list)
    N: list = field(default_factory=list)

    def refl(self, j: int):
        """pi_j(0); equals 1 for j = 0."""
        return self.pi[j][0]

    def star(self, j: int):
        return reversed_poly(self.pi[j])

    def inner(self, p, q):
        return circle_inner(self.moments, p, q)


def circle_inner(c, p, q):
    """<p, q> = sum p_a q_b c_{b-a}."""
    out = 0
    for a, pa in enumerate(p):
        if not _nonzero(pa):
            continue
        for b, qb in enumerate(q):
            if _nonzero(qb):
                out = out + pa * qb * c(b - a)
    return out


def opuc_build(moments: Callable[[int], object], L: int) -> OPUCData:
    """Monic pi_0..pi_L by Gram-Schmidt against the moments."""
    data = OPUCData(moments)
    for n in range(L + 1):
        p = [0] * n + [1]
        zn = list(p)
        for k in range(n):
            coef = circle_inner(moments, zn, data.pi[k]) / data.N[k]
            p = padd(p, pscale(data.pi[k], -coef))
        norm = circle_inner(moments, p, p)
        if not _is_unit(norm):
            raise DegeneracyError(f"non-invertible norm at degree {n}")
        data.pi.append(p)
        data.N.append(norm)
    return data


@lru_cache(maxsize=None)
def bessel_opuc(L: int, order: int) -> OPUCData:
    """OPUC for the weight exp(t(z+1/z)): c_j = I_j(2t)."""
    return opuc_build(lambda j: bessel_I(j, order), L)


def moments_of(g: LaurentSeries):
    """Moments of f = g(z) g(1/z)."""
    gg = g * g.conj()
    return lambda j: gg[j]


# ---------------------------------------------------------------------------
# checks on pi


def _ok(report: dict, name: str, lhs, rhs):
    report[name] = (lhs == rhs)
    return report[name]


def opuc_identities(data: OPUCData, L: int | None = None) -> dict:
    """Orthogonality, the Szego recursion and the product evaluations."""
    L = len(data.pi) - 1 if L is None else L
    rep: dict = {}
    orth = all(not _nonzero(data.inner(data.pi[j], [0] * k + [1]))
               for j in range(L + 1) for k in range(j))
    rep["orthogonality"] = orth
    rec = True
    for l in range(L):
        lhs = data.pi[l + 1]
        rhs = padd(pshift(data.pi[l]), pscale(data.star(l), data.refl(l + 1)))
        rec &= all(not _nonzero(x) for x in padd(lhs, pscale(rhs, -1)))
    rep["szego_recursion"] = rec
    norm = prod1 = prodm1 = True
    for l in range(L + 1):
        acc = data.N[0]
        p1 = 1
        pm = 1
        for j in range(1, l + 1):
            r = data.refl(j)
            acc = acc * (1 - r * r)
            p1 = p1 * (1 + r)
            pm = pm * (1 + (-1) ** j * r)
        norm &= data.N[l] == acc
        prod1 &= pval(data.pi[l], 1) == p1
        prodm1 &= (-1) ** l * pval(data.pi[l], -1) == pm
    rep["norm_product"] = norm
    rep["value_at_1"] = prod1
    rep["value_at_-1"] = prodm1
    return rep


def product_formulas(g: LaurentSeries, data: OPUCData, l: int) -> dict:
    """Group integrals of det g(U) against OPUC products, at size l."""
    one = data.N[0] * 0 + 1
    g1, gm1 = value_at(g, 1), value_at(g, -1)
    P = lambda it: _prod(it, one)
    N, r = data.N, data.refl
    rep = {}
    rep[f"U({l})"] = integral_det("U", l, g) == P(N[j] for j in range(l))
    rep["O+(0)"] = integral_det("O+", 0, g) == 1
    if l >= 1:
        rep[f"O+({2 * l})"] = integral_det("O+", 2 * l, g) == N[0] * P(
            N[2 * j + 2] / (1 + r(2 * j + 2)) for j in range(l - 1))
        rep[f"O-({2 * l})"] = integral_det("O-", 2 * l, g) == g1 * gm1 * P(
            N[2 * j + 2] / (1 - r(2 * j + 2)) for j in range(l - 1))
    rep[f"O+({2 * l + 1})"] = integral_det("O+", 2 * l + 1, g) == g1 * P(
        N[2 * j + 1] / (1 - r(2 * j + 1)) for j in range(l))
    rep[f"O-({2 * l + 1})"] = integral_det("O-", 2 * l + 1, g) == gm1 * P(
        N[2 * j + 1] / (1 + r(2 * j + 1)) for j in range(l))
    rep[f"Sp({2 * l})"] = integral_det("Sp", 2 * l, g) == P(
        N[2 * j + 2] / (1 - r(2 * j + 2)) for j in range(l))
    if l >= 1:
        lhs = g1 * gm1 * integral_det("U", l, g)
        rhs = integral_det("O+", l + 1, g) * integral_det("O-", l + 1, g)
        rep[f"U/O split({l})"] = lhs == rhs
    return rep


def _prod(it, one):
    out = one
    for x in it:
        out = out * x
    return out


def verify_products(g: LaurentSeries, L: int) -> dict:
    data = opuc_build(moments_of(g), 2 * L + 2)
    rep = {}
    for l in range(L + 1):
        rep.update(product_formulas(g, data, l))
    return rep


def tail_products(l: int, J: int, order: int) -> dict:
    """e^{-a t^2} D(t) times the finite OPUC tail, for the five D kinds.

    Each product agrees with 1 through degree 2J.  The D-- tail starts
    at j = l-1, matching its finite product; D--_0 = 1 is exceptional and
    is skipped.
    """
    from .integrals import D_series, szego_limit

    data = bessel_opuc(2 * J + 2, order)
    N, r = data.N, data.refl
    one = TruncatedSeries.const(1, order)
    tails = {
        "D": _prod((N[j] for j in range(l, J)), one),
        "D++": _prod((N[2 * j + 2] / (1 - r(2 * j + 2)) for j in range(l, J)), one),
        "D+-": _prod((N[2 * j + 1] / (1 - r(2 * j + 1)) for j in range(l, J)), one),
        "D-+": _prod((N[2 * j + 1] / (1 + r(2 * j + 1)) for j in range(l, J)), one),
    }
    if l >= 1:
        tails["D--"] = _prod((N[2 * j + 2] / (1 + r(2 * j + 2)) for j in range(l - 1, J)), one)
    out = {}
    for kind, tail in tails.items():
        s = D_series(kind, l, order) * tail / szego_limit(kind, order)
        out[kind] = all(s[k] == (1 if k == 0 else 0) for k in range(min(order, 2 * J) + 1))
    return out


# ---------------------------------------------------------------------------
# half-line families


X_LAURENT = LaurentPoly({1: F(1, 2), -1: F(1, 2)})


def x_moments(c, count: int):
    """mu_k = CT[X^k f(z)] with X = (z + 1/z)/2."""
    return [sum((c(k - 2 * i) * F(comb(k, i), 2 ** k) for i in range(k + 1)),
                start=0 * c(0)) for k in range(count)]


HALFLINE_WEIGHTS = {"--": (1,), "-+": (1, 1), "+-": (1, -1), "++": (1, 0, -1)}


def halfline_build(c, kind: str, L: int):
    """Monic p_0..p_L in x for the weight w(x)(1-x^2)^{-1/2} times
    1, (1+x), (1-x) or (1-x^2), from their Hankel moments."""
    mult = HALFLINE_WEIGHTS[kind]
    mu = x_moments(c, 2 * L + len(mult) + 1)
    m = [sum((a * mu[k + i] for i, a in enumerate(mult) if a), start=0 * mu[0])
         for k in range(2 * L + 1)]
    inner = lambda p, q: sum((pa * qb * m[i + j] for i, pa in enumerate(p) if _nonzero(pa)
                              for j, qb in enumerate(q) if _nonzero(qb)), start=0 * m[0])
    ps, norms = [], []
    for n in range(L + 1):
        p = [0] * n + [1]
        xn = list(p)
        for k in range(n):
            p = padd(p, pscale(ps[k], -inner(xn, ps[k]) / norms[k]))
        nn = inner(p, p)
        if not _is_unit(nn):
            raise DegeneracyError(f"non-invertible {kind} norm at degree {n}")
        ps.append(p)
        norms.append(nn)
    return ps, norms


def _in_x(p) -> LaurentPoly:
    out = LaurentPoly({})
    xp = LaurentPoly({0: 1})
    for a in p:
        if _nonzero(a):
            out = out + xp * LaurentPoly({0: a})
        xp = xp * X_LAURENT
    return out


def halfline_relations_check(c, L: int) -> dict:
    """Every displayed relation linking p^{+-+-} to pi, for l <= L.

    Keys ending in ':printed' are the product forms exactly as printed;
    they carry the factor (1 - pi_0(0)^2) = 0 or omit N_0, so they only
    hold when N_0 = 1 (see the corrected keys).
    """
    data = opuc_build(c, 2 * L + 2)
    fam = {k: halfline_build(c, k, L) for k in HALFLINE_WEIGHTS}
    N, r = data.N, data.refl
    pi = lambda j: to_laurent(data.pi[j])
    st = lambda j: to_laurent(data.star(j))
    z = LaurentPoly.z
    rep: dict = {}

    def prod_(it):
        return _prod(it, N[0] * 0 + 1)

    def ok(name, a, b):
        rep[name] = rep.get(name, True) and (a == b)

    for l in range(L + 1):
        two = z(l, F(2) ** l)
        pmm, ppm, pmp, ppp = (fam[k][0][l] for k in ("--", "+-", "-+", "++"))
        Nmm, Npm, Nmp, Npp = (fam[k][1][l] for k in ("--", "+-", "-+", "++"))
        # p--
        if l == 0:
            ok("p--_0 = 1", pmm, [1])
        else:
            ok("p-- ladder", two * _in_x(pmm), st(2 * l - 1) + z(1) * pi(2 * l - 1))
        ok("p--(1)", pval(pmm, 1), F(2) ** -l * prod_(1 + r(j) for j in range(2 * l)))
        ok("p--(-1)", pval(pmm, -1), F(-2) ** -l * prod_(1 + (-1) ** j * r(j) for j in range(2 * l)))
        ok("N-- via N_2l", Nmm, 4 * F(4) ** -l / 2 * N[2 * l] / (1 + r(2 * l)))
        ok("N-- product:printed", Nmm, 2 * F(4) ** -l / (1 + r(2 * l))
           * prod_(1 - r(j) ** 2 for j in range(2 * l)))
        ok("N-- product:corrected", Nmm, 2 * F(4) ** -l / (1 + r(2 * l))
           * N[0] * prod_(1 - r(j) ** 2 for j in range(1, 2 * l + 1)))
        # p+-
        ok("p+- ladder", (z(0) - z(1)) * two * _in_x(ppm), st(2 * l) - z(1) * pi(2 * l))
        ok("p+-(-1)", pval(ppm, -1), F(-2) ** -l * prod_(1 + (-1) ** j * r(j) for j in range(1, 2 * l + 1)))
        ok("N+- product:printed", Npm, F(4) ** -l * (1 + r(2 * l + 1))
           * prod_(1 - r(j) ** 2 for j in range(1, 2 * l + 1)))
        ok("N+- product:corrected", Npm, F(4) ** -l * (1 + r(2 * l + 1))
           * N[0] * prod_(1 - r(j) ** 2 for j in range(1, 2 * l + 1)))
        ok("N+- via N_2l", Npm, F(4) ** -l * N[2 * l] * (1 + r(2 * l + 1)))
        ok("N+- via N_2l+1", Npm, F(4) ** -l * N[2 * l + 1] / (1 - r(2 * l + 1)))
        # p-+
        ok("p-+ ladder", (z(0) + z(1)) * two * _in_x(pmp), st(2 * l) + z(1) * pi(2 * l))
        ok("p-+(1)", pval(pmp, 1), F(2) ** -l * prod_(1 + r(j) for j in range(1, 2 * l + 1)))
        ok("N-+ product:printed", Nmp, F(4) ** -l * (1 - r(2 * l + 1))
           * prod_(1 - r(j) ** 2 for j in range(1, 2 * l + 1)))
        ok("N-+ product:corrected", Nmp, F(4) ** -l * (1 - r(2 * l + 1))
           * N[0] * prod_(1 - r(j) ** 2 for j in range(1, 2 * l + 1)))
        ok("N-+ via N_2l", Nmp, F(4) ** -l * N[2 * l] * (1 - r(2 * l + 1)))
        ok("N-+ via N_2l+1", Nmp, F(4) ** -l * N[2 * l + 1] / (1 + r(2 * l + 1)))
        # p++
        ok("p++ ladder", (z(0) - z(2)) * two * _in_x(ppp), st(2 * l + 1) - z(1) * pi(2 * l + 1))
        half = F(4) ** -l / 2
        ok("N++ product:printed", Npp, half * (1 + r(2 * l + 2))
           * prod_(1 - r(j) ** 2 for j in range(1, 2 * l + 2)))
        ok("N++ product:corrected", Npp, half * (1 + r(2 * l + 2))
           * N[0] * prod_(1 - r(j) ** 2 for j in range(1, 2 * l + 2)))
        ok("N++ via N_2l+1", Npp, half * N[2 * l + 1] * (1 + r(2 * l + 2)))
        ok("N++ via N_2l+2", Npp, half * N[2 * l + 2] / (1 - r(2 * l + 2)))
    return rep


# ---------------------------------------------------------------------------
# alpha formulae


def _alpha_ring(order: int, cap: int) -> PolyRing:
    return PolyRing(("t", "a", "b"), order, weights={"a": 0, "b": 0},
                    caps={"a": cap, "b": cap})


def _times_linear(g: LaurentSeries, ring: PolyRing, var: str, sign: int) -> LaurentSeries:
    """(1 + sign*var*z) g(z)."""
    lin = LaurentSeries({0: ring.one(), 1: ring.var(var) * sign})
    return lin * g


def alpha_formula_check(l_max: int, order: int, cap: int | None = None) -> dict:
    """The O(m) alpha formulae and their six special cases, Bessel weight."""
    cap = 2 * l_max + 2 if cap is None else cap
    ring = _alpha_ring(order, cap)
    g = exp_tz(order, ring)
    a = ring.var("a")
    ga = _times_linear(g, ring, "a", -1)
    data = bessel_opuc(2 * l_max + 1, order)
    rep: dict = {}

    def ok(name, x, y):
        rep[name] = rep.get(name, True) and (x == y)

    for m in range(1, 2 * l_max + 2):
        k = m - 1
        p = eval_poly(data.pi[k], a, ring)
        s = eval_reversed(data.pi[k], a, ring)
        even = m % 2 == 0
        for grp, sgn in (("O+", 1), ("O-", -1)):
            factor = s + sgn * a * p if even else s - sgn * a * p
            ok(f"{grp} alpha formula", integral_det(grp, m, ga), factor * integral_det(grp, m, g))
    # special cases with scalar alpha
    gt = exp_tz(order)
    g1, gm1 = value_at(gt, 1), value_at(gt, -1)
    one = TruncatedSeries.const(1, order)
    plus = LaurentSeries({0: one, 1: one}) * gt
    minus = LaurentSeries({0: one, 1: -one}) * gt
    for m in range(1, 2 * l_max + 2):
        ok("E_O+(l) det(1+U)g = 2 E_O-(l+1)/g(-1)", integral_det("O+", m, plus),
           2 * integral_det("O-", m + 1, gt) / gm1)
        ok("E_O-(l) det(1+U)g = 0", integral_det("O-", m, plus), 0)
    for l in range(1, l_max + 1):
        ok("E_O+(2l) det(1-U)g = 2 E_O+(2l+1)/g(1)", integral_det("O+", 2 * l, minus),
           2 * integral_det("O+", 2 * l + 1, gt) / g1)
        ok("E_O-(2l) det(1-U)g = 0", integral_det("O-", 2 * l, minus), 0)
    for l in range(0, l_max + 1):
        ok("E_O+(2l+1) det(1-U)g = 0", integral_det("O+", 2 * l + 1, minus), 0)
        ok("E_O-(2l+1) det(1-U)g = 2 E_O-(2l+2)/g(1)", integral_det("O-", 2 * l + 1, minus),
           2 * integral_det("O-", 2 * l + 2, gt) / g1)
    return rep


def divide_one_minus_ab(num: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Quotient and remainder of num by (1 - a b) in the a, b directions.

    Writing num = sum N_{ij} a^i b^j, the quotient satisfies
    Q_{ij} = N_{ij} + Q_{i-1,j-1}; the remainder is num - (1 - ab) Q.
    """
    ring = num.ring
    ia, ib = ring.index["a"], ring.index["b"]
    by_ab: dict = {}
    for exps, c in num.as_dict().items():
        e = list(exps)
        i, j = e[ia], e[ib]
        e[ia] = e[ib] = 0
        by_ab.setdefault((i, j), {})[tuple(e)] = c
    Q: dict = {}
    keys = set(by_ab)
    maxi = max((i for i, _ in keys), default=0)
    maxj = max((j for _, j in keys), default=0)
    for i in range(maxi + 1):
        for j in range(maxj + 1):
            cur = dict(by_ab.get((i, j), {}))
            for e, c in Q.get((i - 1, j - 1), {}).items():
                cur[e] = cur.get(e, 0) + c
            cur = {e: c for e, c in cur.items() if c}
            if cur:
                Q[(i, j)] = cur
    # drop the tail beyond the numerator's degrees: for an exact quotient it is zero
    q = ring.zero()
    for (i, j), d in Q.items():
        if i > maxi - 1 or j > maxj - 1:
            continue
        for e, c in d.items():
            e = list(e)
            e[ia], e[ib] = i, j
            q = q + ring.monomial(e, c)
    one_ab = ring.one() - ring.var("a") * ring.var("b")
    return q, num - one_ab * q


def unitary_alpha_beta_check(l: int, order: int, g: LaurentSeries | None = None,
                             data: OPUCData | None = None) -> dict:
    """E_U(l) det((1-aU)(1-bU^+) g g^+) against the OPUC quotient form."""
    ring = _alpha_ring(order, l + 1)
    if g is None:
        g = exp_tz(order, ring)
        data = bessel_opuc(l, order)
    a, b = ring.var("a"), ring.var("b")
    f1 = _times_linear(g, ring, "a", -1)
    f2 = _times_linear(g, ring, "b", -1)
    lhs = integral_det("U", l, f2, f1)
    base = integral_det("U", l, g)
    pa, pb = eval_poly(data.pi[l], a, ring), eval_poly(data.pi[l], b, ring)
    sa, sb = eval_reversed(data.pi[l], a, ring), eval_reversed(data.pi[l], b, ring)
    num = sa * sb - a * b * pa * pb
    q, rem = divide_one_minus_ab(num)
    rep = {"exact_division": not rem, "quotient_form": lhs == q * base}
    # the O+/O- split of the same integral
    g1, gm1 = value_at(g, 1), value_at(g, -1)
    left = 2 * g1 * gm1 * (1 - a * b) * lhs
    fa, fb = f1, f2
    right = (integral_det("O+", l + 1, fa) * integral_det("O-", l + 1, fb)
             + integral_det("O+", l + 1, fb) * integral_det("O-", l + 1, fa))
    rep["orthogonal_split"] = left == right
    return rep

