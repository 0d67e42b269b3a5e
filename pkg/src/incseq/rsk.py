"""The generalized Knuth correspondence on (W1, W2)-compatible multisets,
Greene invariants, and the multiset models behind the Schur-sum identities.

Multisets are ``Counter`` objects mapping points (x, y) to multiplicities.
A W-set is any container supporting ``in``.  The first tableau P records
first coordinates and the second tableau Q holds the inserted second
coordinates (the order of the pair is switched relative to the usual
Robinson-Schensted convention).

Insertion rule: points are taken in two-line order, sorted by x; among
equal x the y values go increasing when x is in W1 and decreasing
otherwise.  A value b bumps the leftmost entry > b when b is in W2 and
the leftmost entry >= b otherwise.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction as F
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .combinat import conjugate, odd_parts
from .exact import MultiPoly, PolyRing

Tableau = tuple  # tuple of row tuples


class DomainError(ValueError):
    pass


class _Complement:
    """Complement of a W-set inside the ambient order."""

    __slots__ = ("base",)

    def __init__(self, base):
        self.base = base

    def __contains__(self, x):
        return x not in self.base


def complement(W):
    return W.base if isinstance(W, _Complement) else _Complement(W)


def multiset(entries: Iterable) -> Counter:
    """From (x, y) points or (x, y, mult) triples."""
    M: Counter = Counter()
    for e in entries:
        if len(e) == 3:
            x, y, m = e
        else:
            (x, y), m = e, 1
        if m < 0:
            raise DomainError("negative multiplicity")
        if m:
            M[(x, y)] += m
    return M


def transpose(M: Counter) -> Counter:
    return Counter({(y, x): m for (x, y), m in M.items()})


def size(M: Counter) -> int:
    return sum(M.values())


# ---------------------------------------------------------------------------
# compatibility and subsequences


def is_compatible(M: Counter, W1, W2) -> bool:
    """Pairs with (x in W1) != (y in W2) occur at most once."""
    return all(m <= 1 or ((x in W1) == (y in W2)) for (x, y), m in M.items())


def longest_chain(M: Counter, W1, W2, decreasing: bool = False) -> list[tuple]:
    """A longest (W1, W2)-increasing (or -decreasing) sequence, repeats spelled out.

    Decreasing means x weakly up and y weakly down; x may repeat only if
    x is in W1 and y only if y is in W2.
    """
    if not M:
        return []
    sgn = -1 if decreasing else 1
    pts = sorted(M, key=lambda p: (p[0], sgn * p[1]))
    best: list[int] = []
    prev: list[int] = []
    for n, (x, y) in enumerate(pts):
        rep = M[(x, y)] if (x in W1 and y in W2) else 1
        b, arg = 0, -1
        for k in range(n):
            x2, y2 = pts[k]
            if x2 == x and x not in W1:
                continue
            if y2 == y:
                if y not in W2:
                    continue
            elif (y2 > y) != decreasing:
                continue
            if best[k] > b:
                b, arg = best[k], k
        best.append(b + rep)
        prev.append(arg)
    k = max(range(len(pts)), key=lambda i: (best[i], -i))
    out = []
    while k >= 0:
        p = pts[k]
        out.extend([p] * (M[p] if (p[0] in W1 and p[1] in W2) else 1))
        k = prev[k]
    return out[::-1]


def _chain(M: Counter, W1, W2, decreasing: bool) -> int:
    return len(longest_chain(M, W1, W2, decreasing))


def lis_general(M: Counter, W1, W2) -> int:
    """Longest (W1, W2)-increasing subsequence."""
    return _chain(M, W1, W2, False)


def lds_general(M: Counter, W1, W2) -> int:
    """Longest (W1, W2)-decreasing subsequence (y weakly decreasing)."""
    return _chain(M, W1, W2, True)


def _submultisets(M: Counter) -> Iterator[Counter]:
    pts = sorted(M)
    for ks in product(*(range(M[p] + 1) for p in pts)):
        yield Counter({p: k for p, k in zip(pts, ks) if k})


def greene_numbers(M: Counter, W1, W2, k: int) -> tuple[int, int]:
    """(l^(k), l^-(k)) by exhaustive search over submultisets.

    l^(k) is the largest submultiset whose longest complement-decreasing
    sequence is at most k; l^-(k) the largest one whose longest
    (W1, W2)-increasing sequence is at most k.
    """
    C1, C2 = complement(W1), complement(W2)
    inc = dec = 0
    for S in _submultisets(M):
        n = size(S)
        if n > inc and lds_general(S, C1, C2) <= k:
            inc = n
        if n > dec and lis_general(S, W1, W2) <= k:
            dec = n
    return inc, dec


# ---------------------------------------------------------------------------
# bitableaux


def shape(T: Tableau) -> tuple:
    return tuple(len(r) for r in T)


def is_bitableau(T: Tableau, W) -> bool:
    """Weakly increasing rows/columns; W-values once per column, others once per row."""
    for i, row in enumerate(T):
        if i and len(row) > len(T[i - 1]):
            return False
        for j, v in enumerate(row):
            if j and (row[j - 1] > v or (row[j - 1] == v and v not in W)):
                return False
            if i:
                u = T[i - 1][j]
                if u > v or (u == v and v in W):
                    return False
    return True


def content(T: Tableau) -> Counter:
    return Counter(v for row in T for v in row)


def two_line(M: Counter, W1) -> list[tuple]:
    """Insertion order: by x, then y up for x in W1 and down otherwise."""
    out = []
    for x in sorted({p[0] for p in M}):
        ys = sorted((p[1] for p in M if p[0] == x), reverse=x not in W1)
        for y in ys:
            out.extend([(x, y)] * M[(x, y)])
    return out


def knuth_correspondence(M: Counter, W1, W2) -> tuple[Tableau, Tableau]:
    """(P, Q): P records first coordinates, Q holds inserted second ones."""
    if not is_compatible(M, W1, W2):
        raise DomainError("multiset is not (W1, W2)-compatible")
    P: list[list] = []
    Q: list[list] = []
    for x, y in two_line(M, W1):
        b, r = y, 0
        while True:
            if r == len(Q):
                Q.append([b])
                P.append([x])
                break
            row = Q[r]
            pos = bisect_right(row, b) if b in W2 else bisect_left(row, b)
            if pos == len(row):
                row.append(b)
                P[r].append(x)
                break
            row[pos], b = b, row[pos]
            r += 1
    return tuple(map(tuple, P)), tuple(map(tuple, Q))


def knuth_inverse(P: Tableau, Q: Tableau, W1, W2) -> Counter:
    """Left and right inverse of :func:`knuth_correspondence`."""
    if shape(P) != shape(Q):
        raise DomainError("tableaux have different shapes")
    if not (is_bitableau(P, W1) and is_bitableau(Q, W2)):
        raise DomainError("not a pair of bitableaux")
    P = [list(r) for r in P]
    Q = [list(r) for r in Q]
    M: Counter = Counter()
    while P:
        x = max(v for row in P for v in row)
        cells = [(i, j) for i, row in enumerate(P) for j, v in enumerate(row) if v == x]
        if x in W1:
            i, j = max(cells, key=lambda c: (c[1], -c[0]))
        else:
            i, j = max(cells, key=lambda c: (c[0], -c[1]))
        if j != len(P[i]) - 1 or (i + 1 < len(P) and len(P[i + 1]) > j):
            raise DomainError("largest recording entry is not at a corner")
        P[i].pop()
        c = Q[i].pop()
        for r in range(i - 1, -1, -1):
            row = Q[r]
            pos = None
            for p in range(len(row) - 1, -1, -1):
                if row[p] < c or (row[p] == c and c not in W2):
                    pos = p
                    break
            if pos is None:
                raise DomainError("reverse bump failed")
            row[pos], c = c, row[pos]
        if not P[i]:
            P.pop()
            Q.pop()
        M[(x, c)] += 1
    return M


def greene_check(M: Counter, W1, W2) -> bool:
    """Partial row sums = l^(k) and partial column sums = l^-(k) for all k."""
    P, Q = knuth_correspondence(M, W1, W2)
    lam = shape(Q)
    conj = conjugate(lam)
    n = size(M)
    for k in range(1, max(len(lam), len(conj), 1) + 1):
        inc, dec = greene_numbers(M, W1, W2, k)
        if inc != sum(lam[:k]) or dec != sum(conj[:k]):
            return False
        if inc == n and dec == n:
            break
    return True


def fixed_point_count(M: Counter, W) -> int:
    """#{(x,x) in M with x in W} + #{x not in W with (x,x) odd}."""
    out = 0
    for (x, y), m in M.items():
        if x == y:
            out += m if x in W else m % 2
    return out


def symmetry_checks(M: Counter, W1, W2) -> dict:
    """Transpose equivariance, and the odd-column count when M = M^t, W1 = W2."""
    P, Q = knuth_correspondence(M, W1, W2)
    Pt, Qt = knuth_correspondence(transpose(M), W2, W1)
    rep = {"transpose": (Pt, Qt) == (Q, P)}
    if M == transpose(M) and _same_set(W1, W2, M):
        rep["symmetric_equal"] = P == Q
        rep["fixed_points"] = odd_parts(conjugate(shape(P))) == fixed_point_count(M, W1)
    return rep


def _same_set(W1, W2, M) -> bool:
    vals = {v for p in M for v in p}
    return all((v in W1) == (v in W2) for v in vals)


def correspondence_report(M: Counter, W1, W2) -> dict:
    """Every per-multiset property in one record."""
    P, Q = knuth_correspondence(M, W1, W2)
    lam = shape(P)
    rep = {
        "bitableaux": is_bitableau(P, W1) and is_bitableau(Q, W2) and shape(Q) == lam,
        "content": content(P) == Counter(x for (x, y), m in M.items() for _ in range(m))
        and content(Q) == Counter(y for (x, y), m in M.items() for _ in range(m)),
        "round_trip": knuth_inverse(P, Q, W1, W2) == M,
        "lis": (lam[0] if lam else 0) == lis_general(M, W1, W2),
        "greene": greene_check(M, W1, W2),
    }
    rep.update(symmetry_checks(M, W1, W2))
    return rep


def compatible_multisets(n_x: int, n_y: int, total: int, W1, W2) -> Iterator[Counter]:
    """All compatible multisets on [n_x] x [n_y] with total multiplicity <= total."""
    pts = [(x, y) for x in range(1, n_x + 1) for y in range(1, n_y + 1)]
    caps = [total if ((x in W1) == (y in W2)) else 1 for x, y in pts]

    def rec(i, left, cur):
        if i == len(pts):
            yield Counter({p: k for p, k in cur if k})
            return
        for k in range(min(caps[i], left) + 1):
            cur.append((pts[i], k))
            yield from rec(i + 1, left - k, cur)
            cur.pop()

    yield from rec(0, total, [])


def sector_assignments(n: int) -> Iterator[tuple[frozenset, frozenset]]:
    """All (W1, W2) with W1, W2 subsets of [n]: four choices per letter."""
    letters = range(1, n + 1)
    subsets = [frozenset(c) for r in range(n + 1) for c in combinations(letters, r)]
    for W1 in subsets:
        for W2 in subsets:
            yield W1, W2


def _sector_run(args) -> tuple:
    n, total, W1, W2 = args
    fails: Counter = Counter()
    first: dict = {}
    cases = 0
    for M in compatible_multisets(n, n, total, W1, W2):
        cases += 1
        for k, ok in correspondence_report(M, W1, W2).items():
            if not ok:
                fails[k] += 1
                first.setdefault(k, {"M": sorted(M.items()), "W1": sorted(W1), "W2": sorted(W2)})
    return cases, fails, first


def exhaustive_suite(n: int = 3, total: int = 5, sectors=None, jobs: int = 1) -> dict:
    """Run every per-multiset property; count failures per property.

    Sectors are independent, so with jobs > 1 they run in worker processes;
    results are merged in sector order.
    """
    secs = list(sectors if sectors is not None else sector_assignments(n))
    work = [(n, total, W1, W2) for W1, W2 in secs]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_sector_run, work))
    else:
        results = [_sector_run(w) for w in work]
    fails: Counter = Counter()
    first: dict = {}
    cases = 0
    for c, f, fi in results:
        cases += c
        fails.update(f)
        for k, v in fi.items():
            first.setdefault(k, v)
    return {"cases": cases, "sectors": len(secs), "failures": dict(fails), "first": first, "ok": not fails}


# ---------------------------------------------------------------------------
# random multiset models


@dataclass(frozen=True)
class Orbit:
    """Points sharing one multiplicity k, with weight depending on ``kind``.

    g: base^k; b: base^k for k <= 1; gp: param^(k mod 2) base^k;
    ga: (param base)^k.  A missing param means parameter 0.
    """
    points: tuple
    base: tuple          # variable names, product is the base monomial
    kind: str
    param: str | None = None


@dataclass(frozen=True)
class ModelSpec:
    """One of the five models; index i carries the variable vals[i-1].

    W holds indices (positive integers) of the first alphabet; W2/vals2
    are used by the U and UU models only.  alpha/beta name the diagonal
    parameters (None for 0).
    """
    tag: str
    vals: tuple
    W: frozenset = frozenset()
    vals2: tuple = ()
    W2: frozenset = frozenset()
    alpha: str | None = None
    beta: str | None = None

    def sectors(self):
        """(W1, W2) as membership sets on the ambient orders."""
        W = set(self.W)
        if self.tag in ("UU", "u"):
            W = W | {-i for i in W}
        if self.tag == "U":
            return frozenset(W), frozenset(self.W2)
        if self.tag == "UU":
            return frozenset(W), frozenset(set(self.W2) | {-i for i in self.W2})
        if self.tag == "S":
            return frozenset(W), frozenset(-i for i in W)
        return frozenset(W), frozenset(W)


def model_orbits(spec: ModelSpec) -> list[Orbit]:
    t = spec.tag
    v, W = spec.vals, spec.W
    n = len(v)
    out = []

    def same(i, j, W2=None):
        return (i in W) == (j in (W if W2 is None else W2))

    if t == "U":
        for i in range(1, n + 1):
            for j in range(1, len(spec.vals2) + 1):
                out.append(Orbit(((i, j),), (v[i - 1], spec.vals2[j - 1]),
                                 "g" if same(i, j, spec.W2) else "b"))
    elif t == "UU":
        for i in range(1, n + 1):
            for j in range(1, len(spec.vals2) + 1):
                k = "g" if same(i, j, spec.W2) else "b"
                base = (v[i - 1], spec.vals2[j - 1])
                out.append(Orbit(((i, j), (-i, -j)), base, k))
                out.append(Orbit(((i, -j), (-i, j)), base, k))
    elif t == "O":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out.append(Orbit(((i, j), (j, i)), (v[i - 1], v[j - 1]), "g" if same(i, j) else "b"))
            out.append(Orbit(((i, i),), (v[i - 1],), "ga" if i in W else "gp", spec.alpha))
    elif t == "S":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out.append(Orbit(((i, -j), (j, -i)), (v[i - 1], v[j - 1]), "g" if same(i, j) else "b"))
            out.append(Orbit(((i, -i),), (v[i - 1],), "gp" if i in W else "ga", spec.beta))
    elif t == "u":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                k = "g" if same(i, j) else "b"
                base = (v[i - 1], v[j - 1])
                out.append(Orbit(((i, j), (-i, -j), (j, i), (-j, -i)), base, k))
                out.append(Orbit(((i, -j), (-i, j), (-j, i), (j, -i)), base, k))
            out.append(Orbit(((i, i), (-i, -i)), (v[i - 1],), "ga" if i in W else "gp", spec.alpha))
            out.append(Orbit(((i, -i), (-i, i)), (v[i - 1],), "gp" if i in W else "ga", spec.beta))
    else:
        raise ValueError(f"unknown model {t!r}")
    return out


def _orbit_weight(ring: PolyRing, o: Orbit, k: int) -> MultiPoly:
    base = ring.one()
    for nm in o.base:
        base = base * ring.var(nm)
    p = ring.var(o.param) if o.param else None
    if o.kind == "g":
        return base ** k
    if o.kind == "b":
        return base ** k if k <= 1 else ring.zero()
    if o.kind == "ga":
        if p is None:
            return ring.one() if k == 0 else ring.zero()
        return (p * base) ** k
    if o.kind == "gp":
        if k % 2 and p is None:
            return ring.zero()
        return (p if k % 2 else ring.one()) * base ** k
    raise ValueError(o.kind)


def _orbit_mass_inverse(ring: PolyRing, o: Orbit) -> MultiPoly:
    """Probability that the orbit is empty."""
    base = ring.one()
    for nm in o.base:
        base = base * ring.var(nm)
    one = ring.one()
    p = ring.var(o.param) if o.param else ring.zero()
    if o.kind == "g":
        return one - base
    if o.kind == "b":
        return (one + base).inverse()
    if o.kind == "ga":
        return one - p * base
    return (one - base * base) * (one + p * base).inverse()


def empty_probability(ring: PolyRing, spec: ModelSpec) -> MultiPoly:
    out = ring.one()
    for o in model_orbits(spec):
        out = out * _orbit_mass_inverse(ring, o)
    return out


def empty_probability_closed(ring: PolyRing, spec: ModelSpec) -> MultiPoly:
    """The displayed Z products, written out per model."""
    one = ring.one()
    q = lambda i: ring.var(spec.vals[i - 1])
    n = len(spec.vals)
    a = ring.var(spec.alpha) if spec.alpha else ring.zero()
    b = ring.var(spec.beta) if spec.beta else ring.zero()
    W = spec.W

    def zU(vals1, W1, vals2, W2, power):
        out = one
        for i in range(1, len(vals1) + 1):
            for j in range(1, len(vals2) + 1):
                x = ring.var(vals1[i - 1]) * ring.var(vals2[j - 1])
                f = (one - x) if (i in W1) == (j in W2) else (one + x).inverse()
                out = out * f ** power
        return out

    def pairs():
        out = one
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                x = q(i) * q(j)
                out = out * ((one - x) if (i in W) == (j in W) else (one + x).inverse())
        return out

    t = spec.tag
    if t == "U":
        return zU(spec.vals, spec.W, spec.vals2, spec.W2, 1)
    if t == "UU":
        return zU(spec.vals, spec.W, spec.vals2, spec.W2, 2)
    out = one
    if t == "O":
        for i in range(1, n + 1):
            if i in W:
                out = out * (one - a * q(i))
            else:
                out = out * (one + a * q(i)).inverse() * (one - q(i) * q(i))
        return out * pairs()
    if t == "S":
        for i in range(1, n + 1):
            if i not in W:
                out = out * (one - b * q(i))
            else:
                out = out * (one + b * q(i)).inverse() * (one - q(i) * q(i))
        return out * pairs()
    if t == "u":
        for i in range(1, n + 1):
            if i not in W:
                out = out * (one - b * q(i)) * (one + a * q(i)).inverse()
            else:
                out = out * (one + b * q(i)).inverse() * (one - a * q(i))
        return out * zU(spec.vals, W, spec.vals, W, 1)
    raise ValueError(t)


def _degree(o: Orbit) -> int:
    return len(o.base)


def lis_distribution_series(ring: PolyRing, spec: ModelSpec, D: int | None = None) -> dict[int, MultiPoly]:
    """{s: sum of weights of admissible multisets with lis = s}, unnormalised.

    Multisets are enumerated up to q-degree D (the ring's bound by default);
    multiplicities beyond that cannot contribute.
    """
    D = ring.maxdeg if D is None else D
    orbits = model_orbits(spec)
    W1, W2 = spec.sectors()
    out: dict[int, MultiPoly] = {}

    def rec(i, left, M, w):
        if not w:
            return
        if i == len(orbits):
            s = lis_general(M, W1, W2)
            out[s] = out.get(s, ring.zero()) + w
            return
        o = orbits[i]
        k = 0
        while k * _degree(o) <= left:
            wk = _orbit_weight(ring, o, k)
            if wk:
                M2 = M.copy()
                for p in o.points:
                    if k:
                        M2[p] += k
                yield_w = w * wk
                rec(i + 1, left - k * _degree(o), M2, yield_w)
            if o.kind == "b" and k >= 1:
                break
            k += 1

    rec(0, D, Counter(), ring.one())
    return out


def cumulative(dist: dict[int, MultiPoly], l: int, ring: PolyRing) -> MultiPoly:
    out = ring.zero()
    for s, w in dist.items():
        if s <= l:
            out = out + w
    return out


def model_alphabets(spec: ModelSpec):
    """Alphabet q_{W-bar}/q_W (and the second one for U, UU)."""
    from .symfunc import Alphabet
    A = Alphabet("A", plain=tuple(v for i, v in enumerate(spec.vals, 1) if i not in spec.W),
                 sup=tuple(v for i, v in enumerate(spec.vals, 1) if i in spec.W))
    if spec.tag in ("U", "UU"):
        B = Alphabet("B", plain=tuple(v for i, v in enumerate(spec.vals2, 1) if i not in spec.W2),
                     sup=tuple(v for i, v in enumerate(spec.vals2, 1) if i in spec.W2))
        return A, B
    return (A,)


def schur_side(spec: ModelSpec, l: int, D: int, cap: int | None = None):
    """Sum over l(lam) <= l on the Schur side of the distribution identity."""
    from .symfunc import SymRing, schur_sum
    params = {}
    for p in (spec.alpha, spec.beta):
        if p:
            params[p] = D if cap is None else cap
    alphs = model_alphabets(spec)
    sr = SymRing(D, alphs, params)
    A = alphs[0].name
    B = alphs[1].name if len(alphs) > 1 else None
    t = spec.tag
    if t == "U":
        val = schur_sum(sr, "pair", l, A=A, B=B)
    elif t == "UU":
        val = schur_sum(sr, "tilde-pair", l, A=A, B=B)
    elif t == "O":
        val = schur_sum(sr, "O-alpha", l, alpha=spec.alpha, A=A)
    elif t == "S":
        val = schur_sum(sr, "Sp-beta", l, beta=spec.beta, A=A)
    else:
        val = schur_sum(sr, "tilde-ab", l, alpha=spec.alpha, beta=spec.beta, A=A)
    return sr, val


def distribution_check(spec: ModelSpec, l: int, D: int) -> dict:
    """Normalised lis distribution against the restricted Schur sum."""
    sr, rhs = schur_side(spec, l, D)
    ring = sr.ring
    dist = lis_distribution_series(ring, spec, D)
    lhs = cumulative(dist, l, ring)
    total = cumulative(dist, 10 ** 9, ring)
    z = empty_probability(ring, spec)
    rep = {"model": spec.tag, "vals": list(spec.vals), "W": sorted(spec.W), "l": l, "D": D,
           "schur": lhs == rhs,
           "mass": (z * total) == ring.one(),
           "Z_closed_form": z == empty_probability_closed(ring, spec)}
    if spec.tag in ("U", "UU"):
        rep["vals2"], rep["W2"] = list(spec.vals2), sorted(spec.W2)
    rep["ok"] = rep["schur"] and rep["mass"] and rep["Z_closed_form"]
    if not rep["schur"]:
        from .symfunc import first_difference
        rep["counterexample"] = first_difference(lhs, rhs)
    return rep


def _subsets(n):
    return [frozenset(c) for r in range(n + 1) for c in combinations(range(1, n + 1), r)]


def model_family(tag: str, nvars: int) -> Iterator[ModelSpec]:
    """Every W (and W2) for nvars indices, alpha and beta symbolic."""
    vals = tuple(f"q{i}" for i in range(1, nvars + 1))
    if tag in ("U", "UU"):
        vals2 = tuple(f"p{i}" for i in range(1, nvars + 1))
        for W in _subsets(nvars):
            for W2 in _subsets(nvars):
                yield ModelSpec(tag, vals, W, vals2, W2)
        return
    for W in _subsets(nvars):
        yield ModelSpec(tag, vals, W,
                        alpha="a" if tag in ("O", "u") else None,
                        beta="b" if tag in ("S", "u") else None)


# ---------------------------------------------------------------------------
# equidistribution corollary


def _prob_leq(ring: PolyRing, spec: ModelSpec, D: int) -> dict:
    """{l: Prob(lis <= l)} as a series, for every l up to the maximum seen."""
    dist = lis_distribution_series(ring, spec, D)
    z = empty_probability(ring, spec)
    top = max(dist) if dist else 0
    return {l: z * cumulative(dist, l, ring) for l in range(top + 2)}, top


def _at(probs: tuple[dict, int], l: int, ring: PolyRing) -> MultiPoly:
    d, top = probs
    if l < 0:
        return ring.zero()
    return d[min(l, top + 1)]


PAIRS = ("O", "S-floor", "S-ceil", "u-floor", "u-ceil")


def corollary_equidistribution_check(pair: str, q: int = 1, r: int = 1, D: int = 5) -> dict:
    """Both sides of one displayed equidistribution, all lis bounds at once.

    q ordinary and r super variables; alpha and beta are graded like the
    q variables here so that they can move into the alphabet.
    """
    qs = tuple(f"q{i}" for i in range(1, q + 1))
    rs = tuple(f"r{i}" for i in range(1, r + 1))
    ring = PolyRing(qs + rs + ("a", "b"), D)
    vals = qs + rs
    W = frozenset(range(len(qs) + 1, len(vals) + 1))
    checks = []
    if pair == "O":
        left = ModelSpec("O", vals, W, alpha="a")
        vals_r = qs + ("a",) + rs
        right = ModelSpec("O", vals_r, frozenset(range(len(qs) + 1, len(vals_r) + 1)))
        L, R = _prob_leq(ring, left, D), _prob_leq(ring, right, D)
        for l in range(D + 2):
            checks.append((l, _at(L, l, ring) == _at(R, l, ring)))
    elif pair in ("S-floor", "S-ceil"):
        left = ModelSpec("S", vals, W, beta="b")
        L = _prob_leq(ring, left, D)
        if pair == "S-floor":
            R = _prob_leq(ring, ModelSpec("S", vals, W), D)
            for l in range(D + 2):
                # floor(x/2) <= l  <=>  x <= 2l+1 ;  x0/2 <= l  <=>  x0 <= 2l
                checks.append((l, _at(L, 2 * l + 1, ring) == _at(R, 2 * l, ring)))
        else:
            vals_r = ("b",) + vals
            R = _prob_leq(ring, ModelSpec("S", vals_r, frozenset(i + 1 for i in W)), D)
            for l in range(D + 2):
                checks.append((l, _at(L, 2 * l, ring) == _at(R, 2 * l, ring)))
    elif pair in ("u-floor", "u-ceil"):
        left = ModelSpec("u", vals, W, alpha="a", beta="b")
        L = _prob_leq(ring, left, D)
        first = qs + ("a",) + rs
        Wf = frozenset(range(len(qs) + 1, len(first) + 1))
        if pair == "u-ceil":
            first = ("b",) + first
            Wf = frozenset(i + 1 for i in Wf)
        R = _prob_leq(ring, ModelSpec("U", first, Wf, vals, W), D)
        for l in range(D + 2):
            lim = 2 * l + 1 if pair == "u-floor" else 2 * l
            checks.append((l, _at(L, lim, ring) == _at(R, l, ring)))
    else:
        raise ValueError(f"unknown pair {pair!r}")
    return {"pair": pair, "q": q, "r": r, "D": D,
            "checks": [{"l": l, "ok": ok} for l, ok in checks],
            "ok": all(ok for _, ok in checks)}
