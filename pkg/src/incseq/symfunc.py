"""Symmetric and super-symmetric functions, restricted Schur sums and the
Schur-sum identity registry.

Everything lives in one :class:`SymRing`: a truncated polynomial ring
holding one or more alphabets plus weight-0 parameters (alpha, beta).
An alphabet comes in one of three coordinate systems:

``vars``  explicit variables x1..xk (and super variables for the E side);
``sym``   elementary coordinates e1..ek of k variables (weights 1..k), so
          the ring is exactly the degree-truncated symmetric functions in
          k variables and identities are checked without monomial blowup;
``free``  free complete generators h1..hD: the full ring of symmetric
          functions up to degree D.  Perp operators and phi_2 are ring
          maps here.

Super alphabets follow H(t;x/y) = H(t;x)E(t;y) literally.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as F
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .combinat import (conjugate, doubled, has_trivial_two_core, minus_part,
                       odd_parts, partitions, partitions_upto, plus_part,
                       squared, two_core_quotient)
from .exact import MultiPoly, PolyRing, det_minors, is_scalar, pfaffian
from .integrals import LaurentSeries, integral_det

MODES = ("vars", "sym", "free")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    """k ordinary variables and m super (E-side) variables.

    In ``vars`` mode the variable names may be given explicitly through
    ``plain`` and ``sup``; then k and m are taken from them.  Alphabets may
    share explicit variables.
    """
    name: str = "x"
    k: int = 2
    m: int = 0
    mode: str = "vars"
    plain: tuple = ()
    sup: tuple = ()

    def __post_init__(self):
        if self.mode not in MODES:
            raise UsageError(f"unknown alphabet mode {self.mode!r}")
        if self.mode == "free" and self.m:
            raise UsageError("free alphabets have no super part")
        if (self.plain or self.sup) and self.mode != "vars":
            raise UsageError("explicit variable names need vars mode")
        if self.plain or self.sup:
            object.__setattr__(self, "k", len(self.plain))
            object.__setattr__(self, "m", len(self.sup))

    def var_names(self, sup: bool) -> tuple:
        if self.plain or self.sup:
            return self.sup if sup else self.plain
        n = self.name + ("~" if sup else "")
        return tuple(f"{n}{i}" for i in range(1, (self.m if sup else self.k) + 1))

    def names(self, D: int) -> list[tuple[str, int]]:
        """(variable name, weight) pairs this alphabet contributes."""
        n = self.name
        if self.mode == "vars":
            return [(v, 1) for v in self.var_names(False) + self.var_names(True)]
        if self.mode == "sym":
            return ([(f"{n}.e{i}", i) for i in range(1, min(self.k, D) + 1)]
                    + [(f"{n}~.e{i}", i) for i in range(1, min(self.m, D) + 1)])
        return [(f"{n}.h{i}", i) for i in range(1, D + 1)]


class SymRing:
    """Alphabets and parameters sharing one truncated ring of degree D."""

    def __init__(self, D: int, alphabets: Iterable[Alphabet] = (Alphabet(),),
                 params: dict | None = None):
        if D < 0:
            raise UsageError("degree bound must be nonnegative")
        self.D = D
        self.alphabets = {A.name: A for A in alphabets}
        self.params = dict(params or {})
        names, weights, caps = [], {}, {}
        for A in self.alphabets.values():
            for v, w in A.names(D):
                if v not in weights:
                    names.append(v)
                    weights[v] = w
        for p, cap in self.params.items():
            if p in weights:
                raise UsageError(f"parameter {p!r} clashes with a variable")
            names.append(p)
            if cap is None:
                weights[p] = 1
            else:
                weights[p] = 0
                caps[p] = cap
        self.ring = PolyRing(names, D, weights=weights, caps=caps)
        self._cache: dict = {}

    def __repr__(self):
        return f"SymRing(D={self.D}, {list(self.alphabets.values())}, params={self.params})"

    # -- basic elements ---------------------------------------------------
    def one(self) -> MultiPoly:
        return self.ring.one()

    def zero(self) -> MultiPoly:
        return self.ring.zero()

    def var(self, name: str) -> MultiPoly:
        return self.ring.var(name)

    def const(self, c) -> MultiPoly:
        if isinstance(c, MultiPoly):
            return c
        if isinstance(c, str):
            return self.ring.var(c)
        return self.ring.const(c)

    def _alpha(self, A) -> Alphabet:
        if isinstance(A, Alphabet):
            return self.alphabets[A.name]
        return self.alphabets[A]

    def _memo(self, key, make):
        v = self._cache.get(key)
        if v is None:
            v = make()
            self._cache[key] = v
        return v

    # -- ordinary pieces --------------------------------------------------
    def _plain(self, A: Alphabet, kind: str, m: int, sup: bool) -> MultiPoly:
        """h_m or e_m of the ordinary (sup=False) or super (sup=True) part."""
        if m < 0:
            return self.zero()
        if m == 0:
            return self.one()
        if m > self.D:
            return self.zero()
        return self._memo(("plain", A.name, kind, m, sup),
                          lambda: self._plain_make(A, kind, m, sup))

    def _plain_make(self, A: Alphabet, kind: str, m: int, sup: bool) -> MultiPoly:
        n = A.name + ("~" if sup else "")
        k = A.m if sup else A.k
        if A.mode == "vars":
            xs = [self.var(v) for v in A.var_names(sup)]
            if not xs:
                return self.zero()
            return _elementary(xs, m) if kind == "e" else _complete(xs, m, self.one())
        if A.mode == "sym":
            if kind == "e":
                return self.var(f"{n}.e{m}") if m <= k else self.zero()
            # h_m = sum_i (-1)^(i-1) e_i h_(m-i)
            out = self.zero()
            for i in range(1, min(m, k) + 1):
                term = self._plain(A, "e", i, sup) * self._plain(A, "h", m - i, sup)
                out = out + term if i % 2 else out - term
            return out
        if kind == "h":
            return self.var(f"{n}.h{m}")
        out = self.zero()
        for i in range(1, m + 1):
            term = self._plain(A, "h", i, sup) * self._plain(A, "e", m - i, sup)
            out = out + term if i % 2 else out - term
        return out

    # -- public generators ------------------------------------------------
    def h(self, m: int, A="x") -> MultiPoly:
        """Complete symmetric function h_m(x/y); zero for m < 0."""
        A = self._alpha(A)
        if m < 0 or m > self.D:
            return self.zero()
        if not A.m:
            return self._plain(A, "h", m, False)
        return self._memo(("h", A.name, m), lambda: _convolve(
            [self._plain(A, "h", i, False) for i in range(m + 1)],
            [self._plain(A, "e", i, True) for i in range(m + 1)], m, self.zero()))

    def e(self, m: int, A="x") -> MultiPoly:
        """Elementary e_m(x/y): coefficient of u^m in E(u;x)H(u;y)."""
        A = self._alpha(A)
        if m < 0 or m > self.D:
            return self.zero()
        if not A.m:
            return self._plain(A, "e", m, False)
        return self._memo(("e", A.name, m), lambda: _convolve(
            [self._plain(A, "e", i, False) for i in range(m + 1)],
            [self._plain(A, "h", i, True) for i in range(m + 1)], m, self.zero()))

    def H(self, u, A="x") -> MultiPoly:
        """H(u;x) = sum_m u^m h_m, u a scalar or ring element."""
        return self._genfun(u, A, self.h)

    def E(self, u, A="x") -> MultiPoly:
        return self._genfun(u, A, self.e)

    def _genfun(self, u, A, gen):
        u = self.const(u)
        out, p = self.zero(), self.one()
        for m in range(self.D + 1):
            out = out + p * gen(m, A)
            p = p * u
            if not p:
                break
        return out

    def H_z(self, A="x") -> LaurentSeries:
        """H(z;x) as a Laurent series in z with ring coefficients."""
        return LaurentSeries({m: self.h(m, A) for m in range(self.D + 1) if self.h(m, A)})

    def E_z(self, A="x") -> LaurentSeries:
        return LaurentSeries({m: self.e(m, A) for m in range(self.D + 1) if self.e(m, A)})

    def linear_z(self, coeffs: dict) -> LaurentSeries:
        """Laurent polynomial sum_j c_j z^j with c_j scalars, names or polys."""
        return LaurentSeries({j: self.const(c) for j, c in coeffs.items()})

    def geometric_z(self, param: str, sign: int = 1) -> LaurentSeries:
        """(1 - sign*param*z)^{-1}, expanded up to the cap of param (or D)."""
        cap = self.params[param]
        if cap is None:
            cap = self.D
        p = self.var(param)
        return LaurentSeries({j: (p ** j) * (sign ** j) for j in range(cap + 1)})

    # -- Schur functions --------------------------------------------------
    def schur(self, lam: Sequence[int], A="x") -> MultiPoly:
        """Jacobi-Trudi, using the shorter of the h and e forms."""
        lam = tuple(p for p in lam if p)
        A = self._alpha(A)
        if sum(lam) > self.D:
            return self.zero()
        return self._memo(("s", A.name, lam), lambda: self._schur_make(lam, A))

    def _schur_make(self, lam: tuple, A: Alphabet) -> MultiPoly:
        if not lam:
            return self.one()
        conj = conjugate(lam)
        if len(lam) <= len(conj):
            return jacobi_trudi(lam, lambda m: self.h(m, A))
        return jacobi_trudi(conj, lambda m: self.e(m, A))

    def schur_tilde(self, lam: Sequence[int], A="x") -> MultiPoly:
        """Product of the Schur functions of the 2-quotient (0 if the core is not empty)."""
        lam = tuple(p for p in lam if p)
        core, (q0, q1) = two_core_quotient(lam)
        if core:
            return self.zero()
        return self.schur(q0, A) * self.schur(q1, A)

    def schur_tilde_phi2(self, lam: Sequence[int], A="x") -> MultiPoly:
        """(-1)^{f/2} phi_2(s_lam), with phi_2 applied to the h-form entrywise."""
        lam = tuple(p for p in lam if p)
        if sum(lam) > 2 * self.D:
            return self.zero()
        if not lam:
            return self.one()

        def phi2_h(m):
            return self.h(m // 2, A) if m % 2 == 0 else self.zero()

        val = jacobi_trudi(lam, phi2_h)
        f = odd_parts(lam)
        if f % 2:
            if val:
                raise ArithmeticError("phi_2 route gave a nonzero value with odd f")
            return val
        return val if (f // 2) % 2 == 0 else -val

    def schur_super_check(self, lam, A="x") -> bool:
        """h- and e-forms of Jacobi-Trudi agree (also for super alphabets)."""
        lam = tuple(p for p in lam if p)
        A = self._alpha(A)
        if not lam:
            return True
        a = jacobi_trudi(lam, lambda m: self.h(m, A))
        b = jacobi_trudi(conjugate(lam), lambda m: self.e(m, A))
        return a == b

    # -- i_j and g_j ------------------------------------------------------
    def g_entry(self, j: int, A="x", B="y") -> MultiPoly:
        """g_j(x;y) = sum_m h_m(x) h_{m+j}(y)."""
        return self._memo(("g", _nm(A), _nm(B), j), lambda: sum(
            (self.h(m, A) * self.h(m + j, B) for m in range(max(0, -j), self.D + 1)),
            self.zero()))

    def i_entry(self, j: int, A="x") -> MultiPoly:
        """i_j(x) = g_j(x;x); i_{-j} = i_j."""
        return self.g_entry(abs(j), A, A)

    def hankel_det(self, l: int, a: int, b: int, sign: int, A="x") -> MultiPoly:
        """det(i_{j-k+a} + sign * i_{j+k+b}) for 0 <= j,k < l."""
        if l <= 0:
            return self.one()
        return det_minors([[self.i_entry(j - k + a, A) + self.i_entry(j + k + b, A) * sign
                            for k in range(l)] for j in range(l)])

    def gessel_det(self, l: int, A="x", B="y") -> MultiPoly:
        if l <= 0:
            return self.one()
        return det_minors([[self.g_entry(j - k, A, B) for k in range(l)] for j in range(l)])

    # -- perp operators and phi_2 (free mode) ----------------------------
    def _free(self, A) -> Alphabet:
        A = self._alpha(A)
        if A.mode != "free":
            raise UsageError("perp operators and phi_2 act on free h-generators")
        return A

    def perp(self, kind: str, p: MultiPoly, param, A="x") -> MultiPoly:
        """H_perp(beta) (add a variable beta) or E_perp(alpha) (add a super variable).

        Both are ring maps, given on generators by
        H_perp(b): h_j -> sum_i b^i h_{j-i},   E_perp(a): h_j -> h_j + a h_{j-1}.
        """
        A = self._free(A)
        c = self.const(param)
        subs = {}
        for j in range(1, self.D + 1):
            if kind == "H":
                val = self.zero()
                for i in range(j + 1):
                    val = val + (c ** i) * self.h(j - i, A)
            elif kind == "E":
                val = self.h(j, A) + c * self.h(j - 1, A)
            else:
                raise UsageError(f"unknown perp operator {kind!r}")
            subs[f"{A.name}.h{j}"] = val
        return p.subs(subs, self.ring)

    def phi2(self, p: MultiPoly, A="x") -> MultiPoly:
        """phi_2(h_{2n}) = h_n, phi_2(h_{2n+1}) = 0, degree bound halved on input."""
        A = self._free(A)
        subs = {f"{A.name}.h{j}": (self.h(j // 2, A) if j % 2 == 0 else self.zero())
                for j in range(1, self.D + 1)}
        return p.subs(subs, self.ring)


def _nm(A) -> str:
    return A.name if isinstance(A, Alphabet) else A


def _convolve(a, b, m, zero):
    out = zero
    for i in range(m + 1):
        if a[i] and b[m - i]:
            out = out + a[i] * b[m - i]
    return out


def _elementary(xs, m):
    """e_m by the one-variable-at-a-time recursion."""
    one = xs[0].one_like()
    row = [one] + [one * 0] * m
    for x in xs:
        for j in range(m, 0, -1):
            row[j] = row[j] + x * row[j - 1]
    return row[m]


def _complete(xs, m, one):
    row = [one] + [one * 0] * m
    for x in xs:
        for j in range(1, m + 1):
            row[j] = row[j] + x * row[j - 1]
    return row[m]


def jacobi_trudi(lam: Sequence[int], gen: Callable[[int], MultiPoly]) -> MultiPoly:
    """det(gen(lam_i - i + j))."""
    n = len(lam)
    return det_minors([[gen(lam[i] - i + j) for j in range(n)] for i in range(n)])


# ---------------------------------------------------------------------------
# tableau oracle


def ssyt(lam: Sequence[int], k: int):
    """Semistandard tableaux of shape lam in 1..k, as row tuples."""
    lam = tuple(p for p in lam if p)
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    fill: dict = {}

    def rec(n):
        if n == len(cells):
            yield tuple(tuple(fill[(i, j)] for j in range(r)) for i, r in enumerate(lam))
            return
        i, j = cells[n]
        lo = 1
        if j > 0:
            lo = max(lo, fill[(i, j - 1)])
        if i > 0:
            lo = max(lo, fill[(i - 1, j)] + 1)
        for v in range(lo, k + 1):
            fill[(i, j)] = v
            yield from rec(n + 1)
        fill.pop((i, j), None)

    yield from rec(0)


def schur_tableaux(sr: SymRing, lam: Sequence[int], A="x") -> MultiPoly:
    """Sum over semistandard tableaux (explicit ordinary variables only)."""
    A = sr._alpha(A)
    if A.mode != "vars" or A.m:
        raise UsageError("the tableau oracle needs an explicit ordinary alphabet")
    out = sr.zero()
    for T in ssyt(lam, A.k):
        exps = {}
        names = A.var_names(False)
        for row in T:
            for v in row:
                exps[names[v - 1]] = exps.get(names[v - 1], 0) + 1
        out = out + sr.ring.monomial(exps)
    return out


# ---------------------------------------------------------------------------
# restricted Schur sums


def _len(lam):
    return len(lam)


def _col2(lam):
    c = conjugate(lam)
    return c[1] if len(c) > 1 else 0


def _col1(lam):
    return len(lam)


# variant -> (degree multiplier of |lam| in the term, predicate(lam, bound), term kind)
VARIANTS = {
    "pair": "sum_{l(lam)<=l} s(x)s(y)",
    "O-even": "sum_{l(lam)<=l} s_{2lam}",
    "Sp": "sum_{l(lam)<=l} s_{lam^2}",
    "O-alpha": "sum_{l(lam)<=l} a^f(lam) s_lam",
    "Sp-beta": "sum_{l(lam)<=l} b^f(lam') s_lam",
    "all": "sum_{l(lam)<=l} s_lam",
    "column": "sum_{lam'_2<=l} a^f(lam) s_lam",
    "column-det": "sum_{lam'_2<=l<=lam'_1} a^(2lam'_1-l-f) s_lam",
    "tilde-pair": "sum_{l(lam)<=l} st(x)st(y)",
    "tilde-even": "sum_{l(lam)<=l} st_{2lam^2}",
    "tilde-ab": "sum_{l(lam)<=l} a^(f/2) b^(f'/2) st_lam",
    "tilde-column": "sum_{lam'_2<=l} a^(f/2) b^(f'/2) st_lam",
}


def _pw(sr: SymRing, p, k: int) -> MultiPoly:
    if p is None:
        return sr.one() if k == 0 else sr.zero()
    return sr.const(p) ** k


def schur_sum(sr: SymRing, variant: str, l: int, alpha=None, beta=None,
              A="x", B="y") -> MultiPoly:
    """Direct summation over partitions (sizes capped by the degree bound)."""
    if variant not in VARIANTS:
        raise UsageError(f"unknown schur_sum variant {variant!r}")
    D = sr.D
    out = sr.zero()
    if variant in ("pair", "all", "O-alpha", "Sp-beta", "column", "column-det"):
        for lam in partitions_upto(D):
            if variant == "column":
                if _col2(lam) > l:
                    continue
                w = _pw(sr, alpha, odd_parts(lam))
            elif variant == "column-det":
                if not (_col2(lam) <= l <= _col1(lam)):
                    continue
                w = _pw(sr, alpha, 2 * _col1(lam) - l - odd_parts(lam))
            else:
                if len(lam) > l:
                    continue
                if variant == "O-alpha":
                    w = _pw(sr, alpha, odd_parts(lam))
                elif variant == "Sp-beta":
                    w = _pw(sr, beta, odd_parts(conjugate(lam)))
                else:
                    w = sr.one()
            if not w:
                continue
            if variant == "pair":
                out = out + sr.schur(lam, A) * sr.schur(lam, B)
            else:
                out = out + w * sr.schur(lam, A)
        return out
    if variant == "O-even":
        for lam in partitions_upto(D // 2):
            if len(lam) <= l:
                out = out + sr.schur(doubled(lam), A)
        return out
    if variant == "Sp":
        for lam in partitions_upto(D // 2):
            if len(lam) <= l:
                out = out + sr.schur(squared(lam), A)
        return out
    if variant == "tilde-even":
        # s~_{2 lam^2} has degree 2|lam|
        for lam in partitions_upto(D // 2):
            if len(lam) <= l:
                out = out + sr.schur_tilde(doubled(squared(lam)), A)
        return out
    # remaining tilde sums: s~_lam has degree |lam|/2
    for lam in partitions_upto(2 * D):
        if not has_trivial_two_core(lam):
            continue
        if variant == "tilde-pair":
            if len(lam) <= l:
                out = out + sr.schur_tilde(lam, A) * sr.schur_tilde(lam, B)
            continue
        if variant == "tilde-ab" and len(lam) > l:
            continue
        if variant == "tilde-column" and _col2(lam) > l:
            continue
        w = _pw(sr, alpha, odd_parts(lam) // 2) * _pw(sr, beta, odd_parts(conjugate(lam)) // 2)
        if w:
            out = out + w * sr.schur_tilde(lam, A)
    return out


# ---------------------------------------------------------------------------
# identity registry


@dataclass
class Check:
    name: str
    lhs: object
    rhs: object

    def ok(self) -> bool:
        return self.lhs == self.rhs


def first_difference(lhs, rhs):
    """Lowest-degree monomial where two ring elements differ, as a dict."""
    if isinstance(lhs, MultiPoly) or isinstance(rhs, MultiPoly):
        ring = lhs.ring if isinstance(lhs, MultiPoly) else rhs.ring
        d = ring.const(lhs) - rhs if not isinstance(lhs, MultiPoly) else lhs - rhs
        if not d:
            return None
        key = min(d.terms)
        exps = ring.decode(key)
        mono = {v: e for v, e in zip(ring.names, exps) if e}
        return {"monomial": mono, "degree": ring.degree_of(key), "difference": str(d.terms[key])}
    if lhs == rhs:
        return None
    return {"lhs": repr(lhs), "rhs": repr(rhs)}


def _O_pm_forms(sr: SymRing, l: int, A="x") -> MultiPoly:
    """The explicit even/odd orthogonal forms for sum_{l(lam)<=l} s_{2lam}."""
    L, odd = divmod(l, 2)
    Hp, Hm = sr.H(1, A), sr.H(-1, A)
    if odd:
        return (Hp * sr.hankel_det(L, 0, 1, -1, A) + Hm * sr.hankel_det(L, 0, 1, 1, A)) * F(1, 2)
    return (sr.hankel_det(L, 0, 0, 1, A) * F(1, 2)
            + Hp * Hm * sr.hankel_det(L - 1, 0, 2, -1, A)) * F(1, 2)


def _det_u_integral(sr, l, g):
    """E_{O(l)} det(U) det(g(U)) = (E_{O+} - E_{O-}) / 2."""
    if l == 0:
        return sr.one()
    return (integral_det("O+", l, g) - integral_det("O-", l, g)) * F(1, 2)


def _tag_gessel_block(sr, l):
    Hx, Hy = sr.H_z("x"), sr.H_z("y")
    out = [Check("U: sum vs Toeplitz det", schur_sum(sr, "pair", l), sr.gessel_det(l)),
           Check("U: Toeplitz det vs integral", sr.gessel_det(l),
                 integral_det("U", l, Hy, Hx)),
           Check("O: sum vs integral", schur_sum(sr, "O-even", l), integral_det("O", l, Hx))]
    if l > 0:
        out.append(Check("O: sum vs even/odd Hankel forms", schur_sum(sr, "O-even", l),
                         _O_pm_forms(sr, l)))
    out.append(Check("Sp: sum vs Hankel det", schur_sum(sr, "Sp", l),
                     sr.hankel_det(l, 0, 2, -1)))
    out.append(Check("Sp: Hankel det vs integral", sr.hankel_det(l, 0, 2, -1),
                     integral_det("Sp", 2 * l, Hx)))
    return out


def _tag_hyperoctahedral_pair(sr, l):
    Hx, Hy = sr.H_z("x"), sr.H_z("y")
    pair = schur_sum(sr, "tilde-pair", 2 * l)
    return [Check("UU: sum vs integral", pair, integral_det("UU", 2 * l, Hy, Hx)),
            Check("UU: sum vs squared Gessel sum", pair, schur_sum(sr, "pair", l) ** 2),
            Check("u: sum vs integral", schur_sum(sr, "tilde-even", l),
                  integral_det("u", 2 * l, Hx, Hx))]


def _tag_fixinv(sr, l):
    Hx = sr.H_z("x")
    a = sr.linear_z({0: 1, 1: "a"})
    return [Check("O-alpha: sum vs integral", schur_sum(sr, "O-alpha", l, alpha="a"),
                  integral_det("O", l, a * Hx)),
            Check("Sp-beta even: sum vs integral", schur_sum(sr, "Sp-beta", 2 * l, beta="b"),
                  integral_det("Sp", 2 * l, sr.geometric_z("b") * Hx)),
            Check("Sp-beta odd: sum vs H(beta) times integral",
                  schur_sum(sr, "Sp-beta", 2 * l + 1, beta="b"),
                  sr.H("b") * integral_det("Sp", 2 * l, Hx))]


def _tag_all_lambda(sr, l):
    Hx = sr.H_z("x")
    return [Check("all: sum vs E(1) times O- integral", schur_sum(sr, "all", l),
                  sr.E(1) * integral_det("O-", l + 1, Hx)),
            Check("all: sum vs alpha=1 orthogonal integral", schur_sum(sr, "all", l),
                  integral_det("O", l, sr.linear_z({0: 1, 1: 1}) * Hx)),
            Check("all even bound: sum vs det", schur_sum(sr, "all", 2 * l),
                  sr.hankel_det(l, 0, 1, 1)),
            Check("all odd bound: sum vs H(1) det", schur_sum(sr, "all", 2 * l + 1),
                  sr.H(1) * sr.hankel_det(l, 0, 2, -1))]


def _tag_column_bound(sr, l):
    Hx = sr.H_z("x")
    Ea = sr.E("a")
    return [Check("column: sum vs E(alpha) times O integral",
                  schur_sum(sr, "column", l, alpha="a"), Ea * integral_det("O", l, Hx)),
            Check("column-det: sum vs E(alpha) times det-weighted O integral",
                  schur_sum(sr, "column-det", l, alpha="a"), Ea * _det_u_integral(sr, l, Hx))]


def _tag_two_core(sr, l):
    """Domino lemma against the abacus, and both routes to s~ (l unused)."""
    lemma, abacus = [], []
    for lam in partitions_upto(sr.D):
        f = odd_parts(lam)
        pred = odd_parts(plus_part(lam)) == odd_parts(minus_part(lam)) and 2 * odd_parts(plus_part(lam)) == f
        lemma.append((lam, pred))
        abacus.append((lam, has_trivial_two_core(lam)))
    out = [Check("trivial 2-core: odd-part lemma vs abacus", lemma, abacus)]
    for lam in partitions_upto(sr.D):
        out.append(Check(f"s~{lam}: quotient vs phi_2", sr.schur_tilde(lam), sr.schur_tilde_phi2(lam)))
    return out


def _tag_tilde_alpha_beta(sr, l):
    Hx = sr.H_z("x")
    f = sr.linear_z({0: 1, 1: "a"}) * sr.geometric_z("b") * Hx
    return [Check("tilde a,b: sum vs U integral",
                  schur_sum(sr, "tilde-ab", 2 * l, alpha="a", beta="b"),
                  integral_det("U", l, Hx, f))]


def _tag_tilde_pieri(sr, l):
    Hx = sr.H_z("x")
    f = sr.linear_z({0: 1, 1: "a"}) * Hx
    return [Check("tilde odd bound: sum vs H(beta) times U integral",
                  schur_sum(sr, "tilde-ab", 2 * l + 1, alpha="a", beta="b"),
                  sr.H("b") * integral_det("U", l, Hx, f))]


def _tag_tilde_dual(sr, l):
    Hx = sr.H_z("x")
    Ea = sr.E("a")
    return [Check("tilde column even: sum vs E(alpha) times U integral",
                  schur_sum(sr, "tilde-column", 2 * l, alpha="a", beta="b"),
                  Ea * integral_det("U", l, Hx, sr.geometric_z("b") * Hx)),
            Check("tilde column odd: sum vs E(alpha) H(beta) times U integral",
                  schur_sum(sr, "tilde-column", 2 * l + 1, alpha="a", beta="b"),
                  Ea * sr.H("b") * integral_det("U", l, Hx, Hx))]


REGISTRY: dict[str, Callable] = {
    "gessel_block": _tag_gessel_block,
    "hyperoctahedral_pair": _tag_hyperoctahedral_pair,
    "fixinv": _tag_fixinv,
    "all_lambda": _tag_all_lambda,
    "column_bound": _tag_column_bound,
    "two_core": _tag_two_core,
    "tilde_alpha_beta": _tag_tilde_alpha_beta,
    "tilde_pieri": _tag_tilde_pieri,
    "tilde_dual": _tag_tilde_dual,
}
TAGS = tuple(REGISTRY)


@lru_cache(maxsize=None)
def identity_ring(k: int = 4, D: int = 8, cap: int = 3, mode: str = "sym") -> SymRing:
    """The shared ring for the registry: alphabets x, y and parameters a, b."""
    return SymRing(D, (Alphabet("x", k, 0, mode), Alphabet("y", k, 0, mode)),
                   {"a": cap, "b": cap})


def verify_identity(tag: str, l: int, k: int = 4, D: int = 8, cap: int = 3,
                    mode: str = "sym") -> dict:
    """Both sides of every check under a tag; JSON-ready report."""
    if tag not in REGISTRY:
        raise UsageError(f"unknown identity tag {tag!r}")
    if D < 1:
        raise UsageError("degree bound must be at least 1")
    if l < 0:
        raise UsageError("l must be nonnegative")
    sr = identity_ring(k, D, cap, mode)
    checks = REGISTRY[tag](sr, l)
    failed = [c for c in checks if not c.ok()]
    rep = {"tag": tag, "l": l, "k": k, "D": D, "cap": cap,
           "status": "pass" if not failed else "fail",
           "checks": [{"name": c.name, "ok": c.ok()} for c in checks]}
    if failed:
        rep["counterexample"] = {"check": failed[0].name,
                                 **(first_difference(failed[0].lhs, failed[0].rhs) or {})}
    return rep


# ---------------------------------------------------------------------------
# the alpha-weighted pfaffian route (even l)


def pfaffian_route_O(sr: SymRing, l: int, alpha="a", A="x") -> dict:
    """sum_{l(lam)<=l} alpha^f s_lam from the pfaffian of the moment matrix.

    Three routes against the Schur sum:
    ``direct``   pf(M0 + M1) with M1 the rank-two H(1)H(-1) part;
    ``reduced``  pf(M0) + 1/2 H(1;alpha,x) H(-1;alpha,x) pf(M0'), where
                 H(u;alpha,x) = (1 + alpha u) H(u;x) and M0' is the minor
                 on indices >= 2 after subtracting row/column i from
                 row/column i+2 for i decreasing;
    ``printed``  the same with M0'(j,k) = i_{k-j-1} - i_{k-j+1}, which
                 only agrees when l = 2 (M0' empty).
    """
    if l % 2:
        raise UsageError("the pfaffian route is implemented for even l only")
    a = sr.const(alpha)
    i = lambda j: sr.i_entry(j, A)
    one = sr.one()

    def m0(j, k):
        if k <= j:
            return -m0(k, j) if k < j else sr.zero()
        d = k - j
        out = sr.zero()
        for dd in range(d):
            out = out + (one + a * a) * i(2 * dd + 1 - d) + a * (i(2 * dd - d) + i(2 * dd + 2 - d))
        return out * F(1, 2)

    HH = sr.H(1, A) * sr.H(-1, A)
    Ha = HH * (one + a) * (one - a)

    def m1(j, k):
        if (k - j) % 2 == 0:
            return sr.zero()
        if k < j:
            return -m1(k, j)
        return Ha * F((-1) ** j, 2)

    M0 = [[m0(j, k) for k in range(l)] for j in range(l)]
    direct = pfaffian([[M0[j][k] + m1(j, k) for k in range(l)] for j in range(l)])
    R = [row[:] for row in M0]
    for r in range(l - 3, -1, -1):
        R[r + 2] = [R[r + 2][c] - R[r][c] for c in range(l)]
        for row in R:
            row[r + 2] = row[r + 2] - row[r]
    if l == 0:
        reduced = printed = pfaffian(M0)
    else:
        minor = [[R[j][k] for k in range(2, l)] for j in range(2, l)]
        lit = [[i(k - j - 1) - i(k - j + 1) for k in range(l - 2)] for j in range(l - 2)]
        reduced = pfaffian(R) + Ha * F(1, 2) * pfaffian(minor)
        printed = pfaffian(M0) + Ha * F(1, 2) * pfaffian(lit)
    target = schur_sum(sr, "O-alpha", l, alpha=alpha, A=A)
    return {"l": l, "direct": direct, "reduced": reduced, "printed": printed, "sum": target,
            "direct_ok": direct == target, "reduced_ok": reduced == target,
            "printed_ok": printed == target}


# ---------------------------------------------------------------------------
# formal Szego limits for super alphabets


def szego_super_limit(sr: SymRing, group: str, A="x", B="z") -> MultiPoly:
    """The closed product limits (explicit-variable alphabets)."""
    def part(X, sup):
        X = sr._alpha(X)
        if X.mode != "vars":
            raise UsageError("the product limits need explicit variables")
        return [sr.var(v) for v in X.var_names(sup)]

    one = sr.one()
    out = one
    x, y = part(A, False), part(A, True)
    if group == "U":
        z, w = part(B, False), part(B, True)
        for xj in x:
            for zk in z:
                out = out * (one - xj * zk).inverse()
            for wk in w:
                out = out * (one + xj * wk)
        for yj in y:
            for wk in w:
                out = out * (one - yj * wk).inverse()
            for zk in z:
                out = out * (one + yj * zk)
        return out
    if group not in ("O", "Sp"):
        raise UsageError(f"no super limit for {group!r}")
    for xj in x:
        for yk in y:
            out = out * (one + xj * yk)
    strict_x = group == "Sp"
    for a_, b_ in ((x, strict_x), (y, not strict_x)):
        for j in range(len(a_)):
            for k in range(j + 1 if b_ else j, len(a_)):
                out = out * (one - a_[j] * a_[k]).inverse()
    return out


def szego_super_value(sr: SymRing, group: str, l: int, A="x", B="z") -> MultiPoly:
    HA = sr.H_z(A)
    if group == "U":
        return integral_det("U", l, sr.H_z(B), HA)
    if group == "O":
        return integral_det("O", l, HA)
    if group == "Sp":
        return integral_det("Sp", 2 * l, HA)
    raise UsageError(f"unknown group {group!r}")


def szego_super_check(group: str, l: int, k: int = 1, m: int = 1, D: int | None = None) -> dict:
    """Agreement through degree 2l and coefficientwise monotonicity in l."""
    D = 2 * l + 2 if D is None else D
    alphs = [Alphabet("x", k, m)]
    if group == "U":
        alphs.append(Alphabet("z", k, m))
    sr = SymRing(D, alphs)
    lim = szego_super_limit(sr, group)
    cur = szego_super_value(sr, group, l)
    agree = not (lim - cur).truncate(2 * l).terms
    mono = True
    if l > 0:
        prev = szego_super_value(sr, group, l - 1)
        for key in set(lim.terms) | set(cur.terms) | set(prev.terms):
            a, b, c = prev.terms.get(key, 0), cur.terms.get(key, 0), lim.terms.get(key, 0)
            if not (a <= b <= c):
                mono = False
    return {"group": group, "l": l, "k": k, "m": m, "D": D, "agree": agree, "monotone": mono}
