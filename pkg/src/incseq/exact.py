"""Exact arithmetic substrate.

Truncated power series in one variable, truncated multivariate polynomials,
Laurent polynomials with ring coefficients, determinants and pfaffians over
any of these rings.  Everything is exact; coefficients are ints or
``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction as F
from itertools import permutations
from math import factorial
from typing import Any, Callable, Iterable, Sequence

Scalar = (int, F)


class DimensionError(ValueError):
    pass


class StructureError(ValueError):
    pass


def is_scalar(x) -> bool:
    return isinstance(x, Scalar)


def perm_sign(p: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct comparables."""
    seen = [False] * len(p)
    order = sorted(range(len(p)), key=lambda i: p[i])
    # order[r] = position holding the r-th smallest value
    pos = [0] * len(p)
    for r, i in enumerate(order):
        pos[i] = r
    s = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = pos[j]
            ln += 1
        if ln % 2 == 0:
            s = -s
    return s


# ---------------------------------------------------------------------------
# one-variable truncated series


class TruncatedSeries:
    """Power series in t modulo t^(order+1), with rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [F(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            c = c[: order + 1] + [F(0)] * (order + 1 - len(c))
        if not c:
            raise ValueError("a series needs an order")
        self.c = tuple(c)

    @property
    def order(self) -> int:
        return len(self.c) - 1

    @classmethod
    def const(cls, a, order: int) -> "TruncatedSeries":
        return cls([a], order)

    @classmethod
    def t(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, a, k: int, order: int) -> "TruncatedSeries":
        c = [0] * (order + 1)
        if k <= order:
            c[k] = a
        return cls(c)

    def zero_like(self) -> "TruncatedSeries":
        return TruncatedSeries([0], self.order)

    def one_like(self) -> "TruncatedSeries":
        return TruncatedSeries([1], self.order)

    def __getitem__(self, k: int) -> F:
        return self.c[k] if 0 <= k < len(self.c) else F(0)

    def coeff(self, k: int) -> F:
        if k > self.order:
            raise IndexError(f"coefficient t^{k} beyond order {self.order}")
        return self[k]

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        terms = [f"{x}*t^{k}" for k, x in enumerate(self.c) if x]
        return f"TruncatedSeries({' + '.join(terms) or '0'}; O(t^{self.order + 1}))"

    def __eq__(self, other):
        if is_scalar(other):
            other = TruncatedSeries.const(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.c[: order + 1])

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if is_scalar(other):
            return TruncatedSeries.const(other, self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order) + 1
        return TruncatedSeries([self.c[i] + o.c[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-x for x in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            return TruncatedSeries([x * other for x in self.c])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order) + 1
        a, b = self.c, other.c
        out = [F(0)] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        out, base = self.one_like(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def reciprocal(self) -> "TruncatedSeries":
        if not self.c[0]:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        n = len(self.c)
        inv = [F(0)] * n
        inv[0] = 1 / self.c[0]
        for k in range(1, n):
            s = sum((self.c[i] * inv[k - i] for i in range(1, k + 1)), F(0))
            inv[k] = -s * inv[0]
        return TruncatedSeries(inv)

    inverse = reciprocal

    def __truediv__(self, other):
        if is_scalar(other):
            return TruncatedSeries([x / other for x in self.c])
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def is_unit(self) -> bool:
        return bool(self.c[0])

    def exp(self) -> "TruncatedSeries":
        return series_exp(self)

    def scale(self, a) -> "TruncatedSeries":
        """s(a t)."""
        a = F(a)
        return TruncatedSeries([x * a**k for k, x in enumerate(self.c)])

    def shift(self, k: int) -> "TruncatedSeries":
        """t^k s(t), same order."""
        return TruncatedSeries([0] * k + list(self.c), self.order)

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries([0])
        return TruncatedSeries([k * self.c[k] for k in range(1, len(self.c))])


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term, via e' = s' e."""
    if s.c[0]:
        raise ValueError("series_exp needs a zero constant term")
    n = len(s.c)
    ds = [k * s.c[k] for k in range(n)]
    e = [F(0)] * n
    e[0] = F(1)
    for k in range(1, n):
        e[k] = sum((ds[j] * e[k - j] for j in range(1, k + 1)), F(0)) / k
    return TruncatedSeries(e)


def exp_t(a, order: int, power: int = 1) -> TruncatedSeries:
    """exp(a t^power) as a truncated series."""
    c = [F(0)] * (order + 1)
    a = F(a)
    k = 0
    while k * power <= order:
        c[k * power] = a**k / factorial(k)
        k += 1
    return TruncatedSeries(c)


# ---------------------------------------------------------------------------
# multivariate truncated polynomials

_BITS = 8
_MASK = (1 << _BITS) - 1


class PolyRing:
    """Named variables, weighted total degree bounded by ``maxdeg``.

    Variables of weight 0 carry no degree and must have an exponent cap;
    a cap can also be put on graded variables.  The truncation ideal is
    spanned by monomials that break either bound, so arithmetic modulo it
    is consistent.
    Monomials are packed into ints: one 8 bit field per variable, with the
    weighted degree in the top field, so multiplying monomials is adding
    keys and the degree test is a single comparison.
    """

    def __init__(self, names: Sequence[str], maxdeg: int,
                 weights: dict | Sequence[int] | None = None,
                 caps: dict | None = None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.index = {v: i for i, v in enumerate(self.names)}
        n = len(self.names)
        if weights is None:
            w = [1] * n
        elif isinstance(weights, dict):
            w = [weights.get(v, 1) for v in self.names]
        else:
            w = list(weights)
        self.weights = tuple(w)
        caps = dict(caps or {})
        self.caps = tuple(caps.get(v) for v in self.names)
        for v, wt, cp in zip(self.names, self.weights, self.caps):
            if wt == 0 and cp is None:
                raise ValueError(f"ungraded variable {v} needs a cap")
        if maxdeg < 0 or maxdeg > 120:
            raise ValueError("maxdeg must be in 0..120")
        if any(c is not None and c > 120 for c in self.caps):
            raise ValueError("caps must be <= 120")
        self.maxdeg = maxdeg
        self.shift = _BITS * n
        self.limit = (maxdeg + 1) << self.shift
        self.cap_checks = tuple((_BITS * i, c) for i, c in enumerate(self.caps) if c is not None)

    def __repr__(self):
        return f"PolyRing({self.names}, maxdeg={self.maxdeg})"

    def _key(self):
        return (self.names, self.maxdeg, self.weights, self.caps)

    def __eq__(self, other):
        if not isinstance(other, PolyRing):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def encode(self, exps: Sequence[int]) -> int | None:
        deg = 0
        key = 0
        for i, e in enumerate(exps):
            if e < 0:
                raise ValueError("negative exponent")
            if self.caps[i] is not None and e > self.caps[i]:
                return None
            deg += self.weights[i] * e
            key |= e << (_BITS * i)
        if deg > self.maxdeg:
            return None
        return key | (deg << self.shift)

    def decode(self, key: int) -> tuple[int, ...]:
        return tuple((key >> (_BITS * i)) & _MASK for i in range(len(self.names)))

    def degree_of(self, key: int) -> int:
        return key >> self.shift

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return MultiPoly(self, {0: 1})

    def const(self, c) -> "MultiPoly":
        return MultiPoly(self, {0: c} if c else {})

    def var(self, name: str) -> "MultiPoly":
        e = [0] * len(self.names)
        e[self.index[name]] = 1
        return self.monomial(e)

    def monomial(self, exps, c=1) -> "MultiPoly":
        if isinstance(exps, dict):
            e = [0] * len(self.names)
            for v, k in exps.items():
                e[self.index[v]] = k
            exps = e
        key = self.encode(exps)
        if key is None or not c:
            return self.zero()
        return MultiPoly(self, {key: c})

    def gens(self) -> list["MultiPoly"]:
        return [self.var(v) for v in self.names]


class MultiPoly:
    """Element of a :class:`PolyRing`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # construction helpers
    def zero_like(self) -> "MultiPoly":
        return MultiPoly(self.ring, {})

    def one_like(self) -> "MultiPoly":
        return MultiPoly(self.ring, {0: 1})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """(exponent tuple, coefficient) pairs, sorted."""
        dec = self.ring.decode
        return sorted((dec(k), c) for k, c in self.terms.items())

    def as_dict(self) -> dict:
        dec = self.ring.decode
        return {dec(k): c for k, c in self.terms.items()}

    def coeff(self, exps) -> Any:
        if isinstance(exps, dict):
            e = [0] * len(self.ring.names)
            for v, k in exps.items():
                e[self.ring.index[v]] = k
            exps = e
        key = self.ring.encode(exps)
        if key is None:
            raise IndexError("monomial beyond truncation")
        return self.terms.get(key, 0)

    def constant_term(self):
        return self.terms.get(0, 0)

    def is_unit(self) -> bool:
        return bool(self.terms.get(0, 0))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.items():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.ring.names, exps) if e
            )
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)

    def __eq__(self, other):
        if is_scalar(other):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.ring is not self.ring and other.ring != self.ring:
            raise ValueError("comparing polynomials of different rings")
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _check(self, other):
        if other.ring is not self.ring and other.ring != self.ring:
            raise ValueError("mixing polynomials of different rings")

    def __add__(self, other):
        if is_scalar(other):
            other = self.ring.const(other)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if is_scalar(other):
            other = self.ring.const(other)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return MultiPoly(self.ring, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            if not other:
                return self.zero_like()
            return MultiPoly(self.ring, {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return self.zero_like()
        if len(a) > len(b):
            a, b = b, a
        bitems = sorted(b.items())
        limit = self.ring.limit
        caps = self.ring.cap_checks
        out: dict = {}
        get = out.get
        for ka, ca in a.items():
            lim = limit - ka
            for kb, cb in bitems:
                if kb >= lim:
                    break
                k = ka + kb
                if caps:
                    bad = False
                    for s, cp in caps:
                        if ((k >> s) & _MASK) > cp:
                            bad = True
                            break
                    if bad:
                        continue
                out[k] = get(k, 0) + ca * cb
        return MultiPoly(self.ring, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_scalar(other):
            return MultiPoly(self.ring, {k: F(c) / other for k, c in self.terms.items()})
        if isinstance(other, MultiPoly):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.one_like(), self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def _nilpotent_series(self, coeffs: Callable[[int], Any]) -> "MultiPoly":
        """Sum_k coeffs(k) * self^k, for self with zero constant term."""
        if self.terms.get(0, 0):
            raise ValueError("needs a zero constant term")
        out = self.ring.const(coeffs(0))
        p = self.one_like()
        k = 0
        while True:
            k += 1
            p = p * self
            if not p:
                return out
            out = out + p * coeffs(k)

    def exp(self) -> "MultiPoly":
        return self._nilpotent_series(lambda k: F(1, factorial(k)))

    def inverse(self) -> "MultiPoly":
        c0 = self.terms.get(0, 0)
        if not c0:
            raise ZeroDivisionError("constant term is zero")
        rest = (self - c0) * (F(-1) / c0)
        return rest._nilpotent_series(lambda k: 1) * (F(1) / c0)

    def truncate(self, maxdeg: int) -> "MultiPoly":
        lim = (maxdeg + 1) << self.ring.shift
        return MultiPoly(self.ring, {k: c for k, c in self.terms.items() if k < lim})

    def homogeneous_part(self, d: int) -> "MultiPoly":
        s = self.ring.shift
        return MultiPoly(self.ring, {k: c for k, c in self.terms.items() if k >> s == d})

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.terms) >> self.ring.shift

    def map_ring(self, ring: PolyRing, names: dict | None = None) -> "MultiPoly":
        """Re-embed into another ring, renaming variables via ``names``."""
        names = names or {}
        idx = [ring.index[names.get(v, v)] for v in self.ring.names]
        out: dict = {}
        for exps, c in self.as_dict().items():
            e = [0] * len(ring.names)
            for i, k in zip(idx, exps):
                e[i] += k
            key = ring.encode(e)
            if key is not None:
                out[key] = out.get(key, 0) + c
        return MultiPoly(ring, {k: c for k, c in out.items() if c})

    def subs(self, values: dict, ring: PolyRing | None = None) -> "MultiPoly":
        """Substitute variables by scalars or polynomials of ``ring``.

        Variables not in ``values`` are carried over by name.
        """
        ring = ring or self.ring
        cache: dict = {}

        def power(v, k):
            key = (v, k)
            if key not in cache:
                if k == 0:
                    cache[key] = ring.one()
                else:
                    val = values[v] if v in values else ring.var(v)
                    if is_scalar(val):
                        val = ring.const(val)
                    cache[key] = power(v, k - 1) * val
            return cache[key]

        out = ring.zero()
        names = self.ring.names
        for exps, c in self.as_dict().items():
            term = ring.const(c)
            for v, k in zip(names, exps):
                if k:
                    term = term * power(v, k)
                    if not term:
                        break
            out = out + term
        return out

    def coefficient_in(self, var: str) -> dict[int, "MultiPoly"]:
        """Split by powers of one variable: {k: coefficient poly}."""
        i = self.ring.index[var]
        s = _BITS * i
        w = self.ring.weights[i]
        out: dict = {}
        for k, c in self.terms.items():
            e = (k >> s) & _MASK
            k2 = k - (e << s) - ((w * e) << self.ring.shift)
            out.setdefault(e, {})[k2] = c
        return {e: MultiPoly(self.ring, d) for e, d in out.items()}


def poly_from_dict(ring: PolyRing, d: dict) -> MultiPoly:
    out: dict = {}
    for exps, c in d.items():
        key = ring.encode(exps)
        if key is not None and c:
            out[key] = out.get(key, 0) + c
    return MultiPoly(ring, {k: c for k, c in out.items() if c})


def naive_poly_mul(ring: PolyRing, a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Reference product by monomial convolution on exponent tuples."""
    out: dict = {}
    for ea, ca in a.as_dict().items():
        for eb, cb in b.as_dict().items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return poly_from_dict(ring, out)


# ---------------------------------------------------------------------------
# Laurent polynomials in z with coefficients in any ring


class LaurentPoly:
    """Finite sum of c_j z^j; coefficients are scalars or ring elements."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict):
        self.c = {j: v for j, v in coeffs.items() if _nonzero(v)}

    @classmethod
    def z(cls, k: int = 1, c=1) -> "LaurentPoly":
        return cls({k: c})

    def __getitem__(self, j):
        return self.c.get(j, 0)

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return "LaurentPoly(" + ", ".join(f"z^{j}: {v}" for j, v in sorted(self.c.items())) + ")"

    def __eq__(self, other):
        if is_scalar(other):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        keys = set(self.c) | set(other.c)
        return all(not _nonzero(_sub(self[k], other[k])) for k in keys)

    def zero_like(self):
        return LaurentPoly({})

    def one_like(self):
        return LaurentPoly({0: 1})

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({0: other})
        out = dict(self.c)
        for j, v in other.c.items():
            out[j] = _add(out[j], v) if j in out else v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({j: -v for j, v in self.c.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({j: v * other for j, v in self.c.items()})
        out: dict = {}
        for i, a in self.c.items():
            for j, b in other.c.items():
                p = a * b
                out[i + j] = _add(out[i + j], p) if i + j in out else p
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.one_like()
        for _ in range(k):
            out = out * self
        return out

    def conj(self) -> "LaurentPoly":
        """z -> 1/z."""
        return LaurentPoly({-j: v for j, v in self.c.items()})

    def evaluate(self, z):
        out = 0
        for j, v in self.c.items():
            out = _add(out, v * (F(z) ** j))
        return out


def _nonzero(v) -> bool:
    return bool(v)


def _add(a, b):
    return a + b


def _sub(a, b):
    return a - b


# ---------------------------------------------------------------------------
# determinants


def _square(m) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise DimensionError("matrix is not square")
    return n


def _one_of(m):
    for row in m:
        for e in row:
            if not is_scalar(e):
                return e.one_like()
    return 1


def det_bareiss(m) -> F:
    """Fraction-free Bareiss elimination over the rationals."""
    n = _square(m)
    if n == 0:
        return F(1)
    a = [[F(x) for x in row] for row in m]
    sign = 1
    prev = F(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return F(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) / prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det_minors(m):
    """Cofactor expansion with memoised minors: O(n 2^n) ring products."""
    n = _square(m)
    one = _one_of(m)
    if n == 0:
        return one
    cache: dict = {}

    def rec(mask: int, r: int):
        if r == n:
            return one
        if mask in cache:
            return cache[mask]
        total = None
        sign = 1
        row = m[r]
        for c in range(n):
            if mask >> c & 1:
                e = row[c]
                if _nonzero(e):
                    sub = rec(mask & ~(1 << c), r + 1)
                    if _nonzero(sub):
                        term = e * sub
                        if total is None:
                            total = term if sign > 0 else -term
                        else:
                            total = total + term if sign > 0 else total - term
                sign = -sign
        if total is None:
            total = one * 0
        cache[mask] = total
        return total

    return rec((1 << n) - 1, 0)


def det_elimination(m):
    """Gaussian elimination over the fraction field, pivoting on units."""
    n = _square(m)
    one = _one_of(m)
    if n == 0:
        return one
    a = [list(row) for row in m]
    result = one
    for k in range(n):
        piv = None
        for r in range(k, n):
            e = a[r][k]
            if (e.is_unit() if hasattr(e, "is_unit") else _nonzero(e)):
                piv = r
                break
        if piv is None:
            # no unit pivot: expand what is left by minors
            rest = [row[k:] for row in a[k:]]
            return result * det_minors(rest)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            result = -result
        p = a[k][k]
        inv = p.inverse() if hasattr(p, "inverse") else F(1) / p
        result = result * p
        for i in range(k + 1, n):
            f = a[i][k]
            if _nonzero(f):
                f = f * inv
                for j in range(k + 1, n):
                    if _nonzero(a[k][j]):
                        a[i][j] = a[i][j] - f * a[k][j]
    return result


def det(m):
    """Determinant of a square matrix over any supported commutative ring.

    Rational matrices use Bareiss; other rings use memoised cofactor
    expansion below dimension 8 and unit-pivot elimination above.
    """
    n = _square(m)
    if all(is_scalar(e) for row in m for e in row):
        return det_bareiss(m)
    if n < 8:
        return det_minors(m)
    return det_elimination(m)


def det_leibniz(m):
    """Definition-level oracle (small n only)."""
    n = _square(m)
    total = 0
    for p in permutations(range(n)):
        term = perm_sign(p)
        for i in range(n):
            term = term * m[i][p[i]]
        total = total + term
    return total


def matmul(a, b):
    n, k, p = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = 0
            for r in range(k):
                s = s + a[i][r] * b[r][j]
            row.append(s)
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# pfaffians


def _check_antisymmetric(m):
    n = _square(m)
    for i in range(n):
        if _nonzero(m[i][i]):
            raise StructureError("pfaffian needs a zero diagonal")
        for j in range(i + 1, n):
            if _nonzero(m[i][j] + m[j][i]):
                raise StructureError("matrix is not antisymmetric")
    return n


def pfaffian(m):
    """Pfaffian by expansion along the first remaining index, memoised."""
    n = _check_antisymmetric(m)
    if n % 2:
        raise StructureError("pfaffian needs even dimension")
    one = _one_of(m)
    if n == 0:
        return one
    cache: dict = {}

    def rec(mask: int):
        if mask == 0:
            return one
        if mask in cache:
            return cache[mask]
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        total = None
        sign = 1
        for j in range(i + 1, n):
            if rest >> j & 1:
                e = m[i][j]
                if _nonzero(e):
                    sub = rec(rest & ~(1 << j))
                    if _nonzero(sub):
                        term = e * sub
                        if total is None:
                            total = term if sign > 0 else -term
                        else:
                            total = total + term if sign > 0 else total - term
                sign = -sign
        if total is None:
            total = one * 0
        cache[mask] = total
        return total

    return rec((1 << n) - 1)


def pfaffian_matchings(m):
    """Oracle: the defining sum over S_2n divided by 2^n n! (small n)."""
    n = _check_antisymmetric(m)
    if n % 2:
        raise StructureError("pfaffian needs even dimension")
    h = n // 2
    total = 0
    for p in permutations(range(n)):
        term = perm_sign(p)
        for j in range(h):
            term = term * m[p[2 * j]][p[2 * j + 1]]
        total = total + term
    return total * F(1, 2**h * factorial(h))


def bordered_matrix(v, m):
    """Border sits at index -1, in front: B[-1][j] = v[j]."""
    n = _square(m)
    if len(v) != n:
        raise DimensionError("border length must match the matrix")
    zero = _one_of(m) * 0 if n else 0
    b = [[zero] + list(v)]
    for i in range(n):
        b.append([-v[i]] + list(m[i]))
    return b


def bordered_pfaffian(v, m):
    """pf(v; m) for odd-dimensional antisymmetric m."""
    return pfaffian(bordered_matrix(v, m))


# ---------------------------------------------------------------------------
# identity checkers


def de_bruijn_sides(n: int, points: Sequence, rho: dict, phis: Sequence[dict]):
    """Both sides of de Bruijn's formula over a finite (counting) measure.

    ``rho[(x, y)]`` antisymmetric, ``phis[j][x]`` values.  For odd n the
    left pfaffian is bordered by ones (the adjoined point) and the right by
    the sums of the phis.
    """
    pts = list(points)
    for x in pts:
        for y in pts:
            if rho[(x, y)] != -rho[(y, x)]:
                raise StructureError("rho is not antisymmetric")
    if len(phis) != n:
        raise DimensionError("need n functions")
    lhs = F(0)
    for xs in _tuples(pts, n):
        d = det([[phis[j][xs[k]] for k in range(n)] for j in range(n)])
        if not d:
            continue
        a = [[rho[(xs[j], xs[k])] for k in range(n)] for j in range(n)]
        p = pfaffian(a) if n % 2 == 0 else bordered_pfaffian([1] * n, a)
        lhs += p * d
    mat = [[sum((phis[j][x] * rho[(x, y)] * phis[k][y] for x in pts for y in pts), F(0))
            for k in range(n)] for j in range(n)]
    if n % 2 == 0:
        rhs = factorial(n) * pfaffian(mat)
    else:
        v = [sum((phis[j][x] for x in pts), F(0)) for j in range(n)]
        rhs = factorial(n) * bordered_pfaffian(v, mat)
    return lhs, rhs


def _tuples(pts, n):
    if n == 0:
        yield ()
        return
    for t in _tuples(pts, n - 1):
        for x in pts:
            yield t + (x,)


def de_bruijn_check(n: int, points: Sequence, rho: dict, phis: Sequence[dict]) -> bool:
    lhs, rhs = de_bruijn_sides(n, points, rho, phis)
    return lhs == rhs


def _odd_table(x: Callable[[int], Any] | dict, need: int):
    if isinstance(x, dict):
        tab = dict(x)
        for j in range(-need, need + 1):
            if j not in tab:
                raise DimensionError(f"odd table is missing index {j}")
        for j in range(0, need + 1):
            if _nonzero(tab[j] + tab[-j]):
                raise StructureError("table is not odd")
        return lambda j: tab[j] if -need <= j <= need else 0
    return x


def gordon_sides(x, l: int, odd: bool = False):
    """The two sides of Gordon's pfaffian = determinant identity.

    ``x`` is an odd table indexed by integers (dict or callable).  In the
    odd case the result is a pair of Laurent polynomials in z.
    """
    xs = _odd_table(x, 2 * l + 2)
    if not odd:
        a = [[xs(k - j) for k in range(2 * l)] for j in range(2 * l)]
        lhs = pfaffian(a) if l else F(1)
        b = [[sum((xs(j - k + 2 * m + 1) for m in range(k + 1)), F(0)) for k in range(l)]
             for j in range(l)]
        rhs = det(b) if l else F(1)
        return lhs, rhs
    n = 2 * l + 1
    a = [[LaurentPoly({0: xs(k - j)}) for k in range(n)] for j in range(n)]
    v = [LaurentPoly.z(j - l) for j in range(n)]
    lhs = bordered_pfaffian(v, a)
    zz = LaurentPoly({1: 1, -1: 1})
    b = []
    for j in range(l):
        row = []
        for k in range(l):
            e = LaurentPoly({})
            for m in range(k + 1):
                e = e + zz * xs(j - k + 2 * m + 1) - LaurentPoly(
                    {0: xs(j - k + 2 * m) + xs(j - k + 2 * m + 2)})
            row.append(e)
        b.append(row)
    rhs = det(b) if l else LaurentPoly({0: 1})
    return lhs, rhs


def gordon_identity_check(x, l: int) -> bool:
    """Both the even and the bordered form of Gordon's identity."""
    a, b = gordon_sides(x, l, odd=False)
    c, d = gordon_sides(x, l, odd=True)
    return a == b and c == d
