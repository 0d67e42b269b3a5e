"""Compact-group integrals as Toeplitz and Hankel determinants.

Every integral here is a coefficient extraction.  Functions on the
circle are :class:`LaurentSeries` objects: finite Laurent polynomials in
z whose coefficients live in a truncated ring (series in t, or a
MultiPoly ring), together with the window of z-powers they are exact on.
"""
from __future__ import annotations

from fractions import Fraction as F
from functools import lru_cache
from itertools import product
from math import comb, factorial, inf

from .exact import (LaurentPoly, MultiPoly, PolyRing, TruncatedSeries, det,
                    exp_t, _nonzero)


class WindowError(IndexError):
    pass


class LaurentSeries(LaurentPoly):
    """Laurent polynomial known to be exact for |power| <= window.

    The default window is unbounded: a finite Laurent polynomial, or a
    series whose dropped tail vanishes in the coefficient ring (e^{tz}
    modulo t^(N+1)), is exact at every power of z.
    """

    __slots__ = ("window",)

    def __init__(self, coeffs: dict, window: float | None = None):
        super().__init__(coeffs)
        self.window = inf if window is None else window

    @classmethod
    def of(cls, p: LaurentPoly, window: int) -> "LaurentSeries":
        return cls({j: v for j, v in p.c.items() if abs(j) <= window}, window)

    def __mul__(self, other):
        w = min(self.window, getattr(other, "window", self.window))
        return LaurentSeries.of(LaurentPoly.__mul__(self, other), w)

    def conj(self) -> "LaurentSeries":
        return LaurentSeries({-j: v for j, v in self.c.items()}, self.window)


def fourier_coeff(g: LaurentSeries, j: int):
    """Coefficient of z^j, refusing to read outside the exact window."""
    if abs(j) > getattr(g, "window", float("inf")):
        raise WindowError(f"z^{j} is outside the window {g.window}")
    return g[j]


def exp_tz(order: int, ring: PolyRing | None = None, var: str = "t",
           scale=1) -> LaurentSeries:
    """e^{scale t z}: the z^k coefficient is (scale t)^k/k!."""
    c = {}
    for k in range(order + 1):
        a = F(scale) ** k / factorial(k)
        if ring is None:
            c[k] = TruncatedSeries.monomial(a, k, order)
        else:
            c[k] = ring.monomial({var: k}, a)
    return LaurentSeries(c)


def value_at(g: LaurentPoly, z: int):
    """g(1) or g(-1) by summing coefficients."""
    total = None
    for j, v in g.c.items():
        term = v * (z ** j) if z != 1 else v
        total = term if total is None else total + term
    if total is None:
        return 0
    return total


# ---------------------------------------------------------------------------
# Bessel moments and the D/P families


@lru_cache(maxsize=None)
def bessel_I(j: int, order: int) -> TruncatedSeries:
    """I_j(2t) = sum_m t^(2m+|j|) / (m! (m+|j|)!), exact to t^order."""
    j = abs(j)
    c = [F(0)] * (order + 1)
    m = 0
    while 2 * m + j <= order:
        c[2 * m + j] = F(1, factorial(m) * factorial(m + j))
        m += 1
    return TruncatedSeries(c, order)


D_KINDS = ("D", "D--", "D++", "D+-", "D-+")


@lru_cache(maxsize=None)
def D_series(kind: str, l: int, order: int) -> TruncatedSeries:
    """D_l, D^{--}_l, D^{++}_l, D^{+-}_l, D^{-+}_l as determinants of I_j(2t)."""
    I = lambda j: bessel_I(j, order)
    if kind == "D":
        m = [[I(j - k) for k in range(l)] for j in range(l)]
        return _det_or_one(m, order)
    if kind == "D--":
        if l == 0:
            return TruncatedSeries.const(1, order)
        m = [[I(j - k) + I(j + k) for k in range(l)] for j in range(l)]
        return _det_or_one(m, order) / 2
    if kind == "D++":
        m = [[I(j - k) - I(j + k + 2) for k in range(l)] for j in range(l)]
        return _det_or_one(m, order)
    if kind == "D+-":
        m = [[I(j - k) - I(j + k + 1) for k in range(l)] for j in range(l)]
        return _det_or_one(m, order)
    if kind == "D-+":
        m = [[I(j - k) + I(j + k + 1) for k in range(l)] for j in range(l)]
        return _det_or_one(m, order)
    raise ValueError(f"unknown D kind {kind!r}")


def _det_or_one(m, order):
    if not m:
        return TruncatedSeries.const(1, order)
    return det(m)


def _gauss(a, order):
    """e^{a t^2} as a truncated series."""
    return exp_t(a, order, power=2)


def P_series(sym: str, l: int, order: int) -> TruncatedSeries:
    """Poissonized distribution functions P_l(t) from the D-series."""
    D = lambda kind, k: D_series(kind, k, order)
    half = F(1, 2)
    if sym == "U":
        return _gauss(-1, order) * D("D", l)
    if sym == "O":
        g = _gauss(-half, order)
        if l == 0:
            return g
        k, odd = divmod(l, 2)
        if not odd:
            return g * (D("D--", k) + D("D++", k - 1)) / 2
        et = exp_t(1, order)
        emt = exp_t(-1, order)
        return g * (et * D("D+-", k) + emt * D("D-+", k)) / 2
    if sym == "S":
        return _gauss(-half, order) * D("D++", l // 2)
    if sym == "UU":
        k, odd = divmod(l, 2)
        return _gauss(-2, order) * D("D", k) * D("D", k + odd)
    if sym == "u":
        return _gauss(-1, order) * D("D", l // 2)
    raise ValueError(f"unknown symmetry {sym!r}")


def count_from_series(sym: str, l: int, n: int) -> int:
    """Read f_{nl} off e^{a t^2/2} P_l(t) via the coefficient contract."""
    order = 2 * n
    a = {"U": 2, "UU": 4, "O": 1, "S": 1, "u": 2}[sym]
    s = _gauss(F(a, 2), order) * P_series(sym, l, order)
    c = s[2 * n]
    if sym in ("U", "UU"):
        v = c * factorial(n) ** 2
    else:
        v = c * factorial(2 * n)
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral count {v}")
    return int(v)


# ---------------------------------------------------------------------------
# group integrals


GROUPS = ("U", "O+", "O-", "O", "Sp", "UU", "u")


def _iota_table(g: LaurentSeries, need: int):
    gg = g * g.conj()
    return lambda j: fourier_coeff(gg, -j)


def integral_det(group: str, m: int, g: LaurentSeries, f: LaurentSeries | None = None):
    """E det g(U) over the group of size m.

    U(m) takes an optional f and returns E det(f(U) g(U^dagger)); with f
    omitted f = g.  Sp takes m = 2l.  UU(m) and u(m) reduce to U blocks.
    """
    one = _one(g)
    if group in ("U", "UU", "u"):
        f = g if f is None else f
        if group == "U":
            return _toeplitz(f, g, m, one)
        if group == "UU":
            k, odd = divmod(m, 2)
            return _toeplitz(f, g, k, one) * _toeplitz(f, g, k + odd, one)
        if m % 2:
            raise ValueError("u(m) needs m even")
        return _toeplitz(f, g, m // 2, one)
    if group == "O":
        if m == 0:
            return one
        return (integral_det("O+", m, g) + integral_det("O-", m, g)) / 2
    iota = _iota_table(g, m + 2)
    l, odd = divmod(m, 2)
    if group == "Sp":
        if odd:
            raise ValueError("Sp(m) needs m even")
        return _hankel(iota, l, 0, 2, -1, one)
    if group == "O+":
        if m == 0:
            return one
        if odd:
            return value_at(g, 1) * _hankel(iota, l, 0, 1, -1, one)
        return _hankel(iota, l, 0, 0, 1, one) / 2
    if group == "O-":
        if m == 0:
            raise ValueError("O-(0) is empty")
        if odd:
            return value_at(g, -1) * _hankel(iota, l, 0, 1, 1, one)
        return value_at(g, 1) * value_at(g, -1) * _hankel(iota, l - 1, 0, 2, -1, one)
    raise ValueError(f"unknown group {group!r}")


def _one(g):
    for v in g.c.values():
        return v.one_like() if hasattr(v, "one_like") else 1
    return 1


def _toeplitz(f, g, l, one):
    if l == 0:
        return one
    c = f * g.conj()
    return det([[fourier_coeff(c, k - j) for k in range(l)] for j in range(l)])


def _hankel(iota, l, a, b, sign, one):
    """det(iota_{j-k+a} + sign*iota_{j+k+b}) for 0 <= j,k < l."""
    if l <= 0:
        return one
    return det([[iota(j - k + a) + sign * iota(j + k + b) for k in range(l)]
                for j in range(l)])


# ---------------------------------------------------------------------------
# Weyl constant-term oracle


def weyl_ct_unitary(l: int, f: LaurentPoly, g: LaurentPoly):
    """(1/l!) CT prod_{j!=k}(1 - z_j/z_k) prod_j f(z_j) g(1/z_j)."""
    if l > 3:
        raise ResourceWarning("the Weyl oracle is limited to l <= 3")
    if l == 0:
        return 1
    h = f * g.conj()
    terms = {(0,) * l: 1}
    for j in range(l):
        new: dict = {}
        for e, c in terms.items():
            for k, v in h.c.items():
                e2 = list(e)
                e2[j] += k
                e2 = tuple(e2)
                new[e2] = new.get(e2, 0) + c * v
        terms = {e: c for e, c in new.items() if _nonzero(c)}
    for j in range(l):
        for k in range(l):
            if j == k:
                continue
            new = {}
            for e, c in terms.items():
                new[e] = new.get(e, 0) + c
                e2 = list(e)
                e2[j] += 1
                e2[k] -= 1
                e2 = tuple(e2)
                new[e2] = new.get(e2, 0) - c
            terms = {e: c for e, c in new.items() if _nonzero(c)}
    return terms.get((0,) * l, 0) / factorial(l)


# ---------------------------------------------------------------------------
# rotation ensemble


def rotation_series(L: int, order: int) -> TruncatedSeries:
    """Block determinant for sum_n f°_{nL} t^{2n}/(2n)!.

    Rows 0..lp-1 carry t^{j-i}/(j-i)!, rows 0..lm-1 of the second block
    carry (-t)^{lp+i-j}/(lp+i-j)!, with lp = L//2, lm = (L+1)//2.
    """
    lp, lm = L // 2, (L + 1) // 2
    cols = lp + lm

    def ent(k, sign):
        if k < 0:
            return TruncatedSeries.const(0, order)
        return TruncatedSeries.monomial(F(sign) ** k / factorial(k), k, order)

    rows = [[ent(j - i, 1) for j in range(cols)] for i in range(lp)]
    rows += [[ent(lp + i - j, -1) for j in range(cols)] for i in range(lm)]
    return _det_or_one(rows, order)


def rotation_count(L: int, n: int) -> int:
    s = rotation_series(L, 2 * n)
    v = s[2 * n] * factorial(2 * n)
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral count {v}")
    return int(v)


# ---------------------------------------------------------------------------
# diagonal points


def diagonal_ring(order: int) -> PolyRing:
    """t graded up to ``order``; a (alpha) and b (beta) capped at ``order``."""
    return PolyRing(("t", "a", "b"), order, weights={"a": 0, "b": 0},
                    caps={"a": order, "b": order})


def series_to_poly(s: TruncatedSeries, ring: PolyRing, var: str = "t") -> MultiPoly:
    out = ring.zero()
    for k, c in enumerate(s.c):
        if c:
            out = out + ring.monomial({var: k}, c)
    return out


def _lin(ring, coeffs: dict) -> LaurentSeries:
    return LaurentSeries({k: ring.const(v) if not isinstance(v, MultiPoly) else v
                          for k, v in coeffs.items()})


def geometric(ring, var: str, sign: int = 1) -> LaurentSeries:
    """(1 - sign*var*z)^{-1} expanded to the cap of ``var``."""
    cap = ring.caps[ring.index[var]]
    return LaurentSeries({k: ring.monomial({var: k}, sign ** k) for k in range(cap + 1)})


def diagonal_integrand(sym: str, l: int, ring: PolyRing):
    """(group, size, g, f) for the integral route of the diagonal models."""
    N = ring.maxdeg
    e = exp_tz(N, ring)
    a, b = ring.var("a"), ring.var("b")
    one = ring.one()
    if sym == "O":
        return "O", l, _lin(ring, {0: one, 1: a}) * e, None
    if sym == "S":
        k, odd = divmod(l, 2)
        if odd:
            return "Sp", 2 * k, e, None
        return "Sp", 2 * k, geometric(ring, "b") * e, None
    if sym == "u":
        k, odd = divmod(l, 2)
        f = _lin(ring, {0: one, 1: a}) * e
        if not odd:
            f = f * geometric(ring, "b")
        return "U", k, e, f
    raise ValueError("diagonal models exist for O, S and u")


def diagonal_prefactor(sym: str, l: int, ring: PolyRing) -> MultiPoly:
    t, a, b = ring.var("t"), ring.var("a"), ring.var("b")
    if sym == "O":
        x = -a * t - t * t / 2
    elif sym == "S":
        x = -t * t / 2 - (b * t if l % 2 == 0 else 0)
    else:
        x = -a * t - t * t - (b * t if l % 2 == 0 else 0)
    return x.exp()


def P_alpha_integral(sym: str, l: int, order: int) -> MultiPoly:
    """P_l(t; alpha, beta) by the group-integral route."""
    ring = diagonal_ring(order)
    group, m, g, f = diagonal_integrand(sym, l, ring)
    return diagonal_prefactor(sym, l, ring) * integral_det(group, m, g, f)


def P_alpha_opuc(sym: str, l: int, order: int) -> MultiPoly:
    """P_l(t; alpha, beta) through orthogonal polynomials for the Bessel weight.

    Covers every case with a closed form: O at all l, S at odd l, u at odd l.
    """
    from .opuc import bessel_opuc, eval_poly, eval_reversed

    ring = diagonal_ring(order)
    t, a = ring.var("t"), ring.var("a")
    D = lambda kind, k: series_to_poly(D_series(kind, k, order), ring)
    gauss = (-t * t / 2).exp()
    if sym == "O":
        if l == 0:
            return (-a * t).exp() * gauss
        data = bessel_opuc(l, order)
        k, odd = divmod(l, 2)
        j = l - 1
        pj = eval_poly(data.pi[j], -a, ring)
        sj = eval_reversed(data.pi[j], -a, ring)
        pre = (-a * t).exp() * gauss / 2
        if not odd:
            return pre * ((sj - a * pj) * D("D--", k) + (sj + a * pj) * D("D++", k - 1))
        et, emt = t.exp(), (-t).exp()
        return pre * ((sj + a * pj) * et * D("D+-", k) + (sj - a * pj) * emt * D("D-+", k))
    if sym == "S":
        if l % 2 == 0:
            raise ValueError("no closed form for even S with beta")
        return gauss * D("D++", l // 2)
    if sym == "u":
        if l % 2 == 0:
            raise ValueError("no closed form for even u with beta")
        k = l // 2
        data = bessel_opuc(k, order)
        return (-a * t - t * t).exp() * eval_reversed(data.pi[k], -a, ring) * D("D", k)
    raise ValueError("diagonal models exist for O, S and u")


def P_alpha_special(case: str, l: int, order: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the alpha = 1 specializations.

    case 'O1': P^O_l(t;1) against e^{-t^2/2} E_{O-(l+1)} exp(t Tr U).
    case 'S1': P^S_l(t;1) against the same right side.
    case 'u1': P^u_{2l+1}(t;1,beta) against e^{-t-t^2} D-products.
    """
    ring = diagonal_ring(order)
    t = ring.var("t")
    D = lambda kind, k: series_to_poly(D_series(kind, k, order), ring)
    gauss = (-t * t / 2).exp()
    if case in ("O1", "S1"):
        sym = case[0]
        lhs = P_alpha_integral(sym, l, order)
        lhs = lhs.subs({"a": 1} if sym == "O" else {"b": 1})
        g = exp_tz(order, ring)
        rhs = gauss * integral_det("O-", l + 1, g)
        return lhs, rhs
    if case == "u1":
        lhs = P_alpha_integral("u", 2 * l + 1, order).subs({"a": 1})
        k, odd = divmod(l, 2)
        pre = (-t - t * t).exp()
        rhs = pre * D("D++", k) * D("D-+", k + odd)
        return lhs, rhs
    raise ValueError(f"unknown special case {case!r}")


def ftilde_from_series(sym: str, l: int, n: int, order: int | None = None) -> dict:
    """{fixed counts: f~} read off e^{...} P_l(t;alpha,beta) at t^n."""
    order = n if order is None else order
    ring = diagonal_ring(order)
    group, m, g, f = diagonal_integrand(sym, l, ring)
    s = integral_det(group, m, g, f)
    if sym == "S" and l % 2:
        # the odd S model ignores beta: restore the beta-dependent normalizer
        s = s * (ring.var("b") * ring.var("t")).exp()
    if sym == "u" and l % 2:
        s = s * (ring.var("b") * ring.var("t")).exp()
    out = {}
    for exps, c in s.as_dict().items():
        tn, ea, eb = exps
        if tn != n:
            continue
        v = c * factorial(n)
        if v.denominator != 1:
            raise ArithmeticError(f"non-integral count {v}")
        key = {"O": (ea,), "S": (eb,), "u": (ea, eb)}[sym]
        out[key] = int(v)
    return out


# ---------------------------------------------------------------------------
# formal Szego


def szego_limit(kind: str, order: int) -> TruncatedSeries:
    half = F(1, 2)
    return {
        "D": _gauss(1, order),
        "D--": _gauss(half, order),
        "D++": _gauss(half, order),
        "D+-": _gauss(half, order) * exp_t(-1, order),
        "D-+": _gauss(half, order) * exp_t(1, order),
    }[kind]


def first_difference_degree(s: TruncatedSeries, lim: TruncatedSeries) -> int | None:
    for k in range(min(s.order, lim.order) + 1):
        if s[k] != lim[k]:
            return k
    return None


def group_trace_series(group: str, m: int, order: int) -> TruncatedSeries:
    """E exp(t Tr U) (two-sided |.|^2 for U) in D-series form.

    U: U(m).  O: O(m), the average of O+(m) and O-(m).  Sp: Sp(2m).
    """
    D = lambda kind, k: D_series(kind, k, order)
    if group == "U":
        return D("D", m)
    if group == "Sp":
        return D("D++", m)
    if group == "O":
        if m == 0:
            return TruncatedSeries.const(1, order)
        k, odd = divmod(m, 2)
        if not odd:
            return (D("D--", k) + D("D++", k - 1)) / 2
        return (exp_t(1, order) * D("D+-", k) + exp_t(-1, order) * D("D-+", k)) / 2
    raise ValueError(f"unknown group {group!r}")


def formal_szego_check(group: str, l: int, order: int | None = None) -> dict:
    """Agreement with the limit through degree 2l, and monotonicity in l.

    The sizes are U(l), O(l) and Sp(2l).  Monotone means every
    coefficient of the limit minus the series is nonnegative and does
    not grow from l-1 to l.
    """
    order = 2 * l + 4 if order is None else order
    lim = szego_limit("D" if group == "U" else "D++", order)
    cur = group_trace_series(group, l, order)
    agree = all(cur[k] == lim[k] for k in range(2 * l + 1))
    mono = True
    if l > 0:
        prev = group_trace_series(group, l - 1, order)
        for k in range(order + 1):
            gap, gap_prev = lim[k] - cur[k], lim[k] - prev[k]
            if gap < 0 or gap > gap_prev:
                mono = False
    return {"group": group, "l": l, "order": order, "agree": agree, "monotone": mono,
            "first_difference": first_difference_degree(cur, lim)}
