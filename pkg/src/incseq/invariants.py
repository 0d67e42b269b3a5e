"""Straightening in the symmetric group algebra and explicit invariant bases.

Permutations are one-line tuples p with p[i-1] = p(i); products are the
usual composition (p*q)(i) = p(q(i)).  The tensor operator follows

    T_l(p) (v_1 x ... x v_n) = v_{p(1)} x ... x v_{p(n)},

so on basis words T_l(p) e_w = e_{w o p}.  With composition as above this
is an anti-homomorphism: T_l(p o q) = T_l(q) T_l(p).

Operators and invariant tensors are stored as sparse dicts; ranks are
computed exactly over the rationals.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction as F
from itertools import combinations, permutations, product
from math import factorial
from typing import Iterable, Sequence

from .combinat import compose, f_count, inverse, inversions, lds, lis
from .exact import perm_sign
from .rsk import is_compatible, lds_general, lis_general, longest_chain

Perm = tuple
Element = dict  # Perm -> Fraction, no zero values

MAX_WORDS = 10 ** 5


class ResourceError(RuntimeError):
    pass


class DomainError(ValueError):
    pass


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _axpy(acc: dict, c, d: dict) -> None:
    for k, v in d.items():
        x = acc.get(k, 0) + c * v
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)


def element(terms: Iterable) -> Element:
    """From (perm, coeff) pairs or a plain permutation."""
    if isinstance(terms, tuple) and terms and isinstance(terms[0], int):
        return {tuple(terms): F(1)}
    out: dict = {}
    for p, c in terms:
        _axpy(out, F(c), {tuple(p): 1})
    return out


def mul(a: Element, b: Element) -> Element:
    out: dict = {}
    for p, x in a.items():
        for q, y in b.items():
            _axpy(out, x * y, {compose(p, q): 1})
    return out


def _fixing(S: Sequence[int], n: int) -> list[tuple[Perm, int]]:
    """Permutations of S_n fixing the complement of S, with signs."""
    S = sorted(S)
    base = list(range(1, n + 1))
    out = []
    for img in permutations(S):
        p = base[:]
        for x, y in zip(S, img):
            p[x - 1] = y
        p = tuple(p)
        out.append((p, perm_sign(p)))
    return out


def E_S(S: Sequence[int], n: int) -> Element:
    return {p: F(s) for p, s in _fixing(S, n)}


def H_S(S: Sequence[int], n: int) -> Element:
    return {p: F(1) for p, _ in _fixing(S, n)}


def kernel_element(pi: Perm, S: Sequence[int], n: int | None = None) -> Element:
    """pi E_S; in ker T_l whenever |S| > l."""
    n = len(pi) if n is None else n
    return mul({tuple(pi): F(1)}, E_S(S, n))


# ---------------------------------------------------------------------------
# tensor operators


def words(l: int, n: int) -> list[tuple]:
    if l ** n > MAX_WORDS:
        raise ResourceError(f"{l}^{n} words exceed the guard {MAX_WORDS}")
    return list(product(range(1, l + 1), repeat=n))


def T_matrix(pi, l: int, n: int | None = None) -> dict:
    """Sparse operator {(w_out, w_in): coeff}; accepts a perm or an element."""
    if l < 1:
        raise DomainError("l must be at least 1")
    e = element(pi) if not isinstance(pi, dict) else pi
    if not e:
        return {}
    n = len(next(iter(e))) if n is None else n
    ws = words(l, n)
    out: dict = {}
    for p, c in e.items():
        for w in ws:
            key = (tuple(w[p[j] - 1] for j in range(n)), w)
            x = out.get(key, 0) + c
            if x:
                out[key] = x
            else:
                del out[key]
    return out


def compose_operators(A: dict, B: dict) -> dict:
    """A o B for sparse operators."""
    by_row: dict = {}
    for (o, i), c in B.items():
        by_row.setdefault(o, []).append((i, c))
    out: dict = {}
    for (o, m), a in A.items():
        for i, b in by_row.get(m, ()):
            _axpy(out, a * b, {(o, i): 1})
    return out


class Echelon:
    """Incremental exact row echelon form over sparse rational vectors."""

    def __init__(self):
        self.rows: dict = {}  # pivot key -> normalised row

    def reduce(self, v: dict) -> dict:
        v = {k: F(x) for k, x in v.items() if x}
        while v:
            piv = min(v)
            r = self.rows.get(piv)
            if r is None:
                return v
            _axpy(v, -v[piv], r)
        return v

    def add(self, v: dict) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        piv = min(v)
        c = v[piv]
        self.rows[piv] = {k: x / c for k, x in v.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(vectors: Iterable[dict]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


# ---------------------------------------------------------------------------
# straightening for U(l)


def decreasing_positions(pi: Perm, length: int) -> tuple | None:
    """Lexicographically first positions of a decreasing run of given length."""
    n = len(pi)
    # longest decreasing subsequence starting at each position
    best = [1] * n
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            if pi[j] < pi[i]:
                best[i] = max(best[i], best[j] + 1)
    out, last, need = [], None, length
    for i in range(n):
        if need and best[i] >= need and (last is None or pi[i] < pi[last]):
            out.append(i + 1)
            last, need = i, need - 1
    return tuple(out) if not need else None


def straighten_U(e, l: int, trace: list | None = None) -> Element:
    """Rewrite e modulo ker T_l onto permutations with lds <= l.

    The support element with the most inversions is eliminated first;
    each elimination only produces permutations with fewer inversions.
    """
    e = dict(element(e) if not isinstance(e, dict) else e)
    if l < 0:
        raise DomainError("l must be nonnegative")
    while True:
        bad = [p for p in e if lds(p) > l]
        if not bad:
            return e
        pi = max(bad, key=lambda p: (inversions(p), p))
        S = decreasing_positions(pi, l + 1)
        c = e.pop(pi)
        if trace is not None:
            trace.append({"perm": pi, "positions": S})
        for p, s in _fixing(S, len(pi)):
            q = compose(pi, p)
            if q != pi:
                _axpy(e, -c * s, {q: 1})


def basis_U(n: int, l: int) -> list[Perm]:
    return sorted(p for p in permutations(range(1, n + 1)) if lds(p) <= l)


def lds_word_profile(pi: Perm) -> tuple[tuple, tuple]:
    """(w1, w2): longest decreasing run starting with value j / at position j."""
    n = len(pi)
    at = [1] * n
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            if pi[j] < pi[i]:
                at[i] = max(at[i], at[j] + 1)
    w2 = tuple(at)
    w1 = [0] * n
    for i in range(n):
        w1[pi[i] - 1] = at[i]
    return tuple(w1), w2


def triangularity_witness(n: int, l: int) -> bool:
    """For basis pi: T_l(pi) has coefficient 1 at (w2, w1), and any other basis
    element nonzero there has strictly more inversions."""
    B = basis_U(n, l)
    for pi in B:
        w1, w2 = lds_word_profile(pi)
        if max(w1, default=1) > l:
            return False
        if tuple(w1[pi[j] - 1] for j in range(n)) != w2:
            return False
        for q in B:
            if q != pi and tuple(w1[q[j] - 1] for j in range(n)) == w2:
                if inversions(q) <= inversions(pi):
                    return False
    return True


def basis_U_certificate(n: int, l: int) -> dict:
    B = basis_U(n, l)
    r = rank(T_matrix(p, l, n) for p in B) if l >= 1 else (1 if n == 0 else 0)
    span = rank(T_matrix(p, l, n) for p in permutations(range(1, n + 1))) if l >= 1 and n else r
    f = f_count("U", n, l)
    return {"n": n, "l": l, "size": len(B), "rank": r, "span_dim": span, "f": f,
            "triangular": triangularity_witness(n, l),
            "ok": len(B) == r == span == f}


def straighten_certificate(e, l: int) -> dict:
    e = element(e) if not isinstance(e, dict) else e
    out = straighten_U(e, l)
    n = len(next(iter(e))) if e else 0
    return {"reduced": all(lds(p) <= l for p in out),
            "equal_operator": l < 1 or T_matrix(e, l, n) == T_matrix(out, l, n),
            "result": out}


def centralizer_dim_check(n: int, l: int) -> dict:
    """Rank of span T_l(S_n) against f^U_{nl} and the unitary moment."""
    dim = rank(T_matrix(p, l, n) for p in permutations(range(1, n + 1)))
    f = f_count("U", n, l)
    moment = unitary_trace_moment(n, l)
    return {"n": n, "l": l, "dim": dim, "f": f, "moment": moment, "ok": dim == f == moment}


def unitary_trace_moment(n: int, l: int) -> int:
    """E_{U(l)} |Tr U|^{2n}, read off the Toeplitz-determinant series."""
    from .integrals import count_from_series
    return count_from_series("U", l, n)


# ---------------------------------------------------------------------------
# multiset generalization


def blocks(nu: Sequence[int]) -> list[range]:
    out, start = [], 1
    for k in nu:
        out.append(range(start, start + k))
        start += k
    return out


def block_of(nu: Sequence[int]) -> dict[int, int]:
    return {p: i for i, b in enumerate(blocks(nu), 1) for p in b}


def projector(nu: Sequence[int], W) -> Element:
    """Pi(nu): antisymmetrizers on W blocks, symmetrizers on the others."""
    n = sum(nu)
    out = {tuple(range(1, n + 1)): F(1)}
    for i, b in enumerate(blocks(nu), 1):
        if len(b) > 1:
            out = mul(out, E_S(b, n) if i in W else H_S(b, n))
    return out


def multiset_of(pi: Perm, nu, nu2) -> Counter:
    """{(block of position, block of value)}."""
    b1, b2 = block_of(nu), block_of(nu2)
    return Counter((b1[p], b2[pi[p - 1]]) for p in range(1, len(pi) + 1))


def canonical_perm(M: Counter, nu, nu2, W, W2) -> Perm:
    """The representative whose W blocks are decreasing and other blocks increasing."""
    rows = Counter()
    cols = Counter()
    for (x, y), m in M.items():
        rows[x] += m
        cols[y] += m
    if any(rows[i] != k for i, k in enumerate(nu, 1)) or any(cols[j] != k for j, k in enumerate(nu2, 1)):
        raise DomainError("multiset content does not match the compositions")
    # second coordinates in position order
    seq = []
    for x in range(1, len(nu) + 1):
        ys = sorted((y for (a, y), m in M.items() if a == x for _ in range(m)), reverse=x in W)
        seq.extend(ys)
    vals = {j: list(b) for j, b in enumerate(blocks(nu2), 1)}
    for j in vals:
        if j in W2:
            vals[j].reverse()
    used = Counter()
    out = []
    for y in seq:
        out.append(vals[y][used[y]])
        used[y] += 1
    return tuple(out)


def X_element(pi: Perm, nu, nu2, W, W2) -> Element:
    """Pi(nu2) pi Pi(nu)."""
    return mul(mul(projector(nu2, W2), {tuple(pi): F(1)}), projector(nu, W))


def T_multiset(M: Counter, nu, nu2, W, W2) -> Element:
    return X_element(canonical_perm(M, nu, nu2, W, W2), nu, nu2, W, W2)


def multiset_inversions(M: Counter) -> int:
    pts = sorted(M)
    return sum(M[a] * M[b] for a, b in combinations(pts, 2) if a[0] < b[0] and a[1] > b[1])


def _key(M: Counter) -> tuple:
    return tuple(sorted((p, m) for p, m in M.items() if m))


def decompose(e: Element, nu, nu2, W, W2) -> dict:
    """Write an element of Pi(nu2) C[S_n] Pi(nu) in the X_M basis: {key(M): coeff}."""
    out = {}
    seen = set()
    for p in e:
        M = multiset_of(p, nu, nu2)
        k = _key(M)
        if k in seen:
            continue
        seen.add(k)
        can = canonical_perm(M, nu, nu2, W, W2)
        X = X_element(can, nu, nu2, W, W2)
        if not X:
            continue
        c = e.get(can, 0) / X[can]
        if c:
            out[k] = c
    return out


def straighten_U_multiset(nu, nu2, W, W2, e: dict, l: int) -> dict:
    """Reduce {key(M): coeff} onto multisets with (W, W2)-decreasing length <= l."""
    W, W2 = frozenset(W), frozenset(W2)
    e = dict(e)
    n = sum(nu)
    for k in e:
        M = Counter(dict(k))
        if not is_compatible(M, W, W2):
            raise DomainError(f"incompatible multiset {k}: a mixed pair repeats, so the projected element vanishes")
    while True:
        bad = [k for k in e if lds_general(Counter(dict(k)), W, W2) > l]
        if not bad:
            return e
        k = max(bad, key=lambda k: (multiset_inversions(Counter(dict(k))), k))
        M = Counter(dict(k))
        pi = canonical_perm(M, nu, nu2, W, W2)
        chain = longest_chain(M, W, W2, decreasing=True)[: l + 1]
        S = _chain_positions(pi, chain, nu, nu2)
        rel = decompose(mul(mul(projector(nu2, W2), kernel_element(pi, S, n)), projector(nu, W)),
                        nu, nu2, W, W2)
        self_c = rel.pop(k)
        c = e.pop(k)
        for k2, x in rel.items():
            _axpy(e, -c * x / self_c, {k2: 1})


def _chain_positions(pi: Perm, chain: list, nu, nu2) -> tuple:
    """Positions of pi realizing a decreasing chain of multiset points."""
    b1, b2 = block_of(nu), block_of(nu2)
    taken = set()
    out = []
    last = None
    for pt in chain:
        for p in range(1, len(pi) + 1):
            if p in taken or (b1[p], b2[pi[p - 1]]) != pt:
                continue
            if last is not None and (p < last or pi[p - 1] > pi[last - 1]):
                continue
            out.append(p)
            taken.add(p)
            last = p
            break
        else:
            raise RuntimeError("chain is not realized by the canonical permutation")
    return tuple(out)


def compatible_multisets_with_content(nu, nu2, W, W2) -> list[Counter]:
    """All (W, W2)-compatible multisets with row sums nu and column sums nu2."""
    rows, cols = len(nu), len(nu2)
    out = []

    def rec(i, j, left_row, left_col, cur):
        if i > rows:
            if all(c == 0 for c in left_col):
                out.append(Counter(cur))
            return
        if j > cols:
            if left_row == 0:
                rec(i + 1, 1, nu[i] if i < rows else 0, left_col, cur)
            return
        cap = min(left_row, left_col[j - 1])
        if (i in W) != (j in W2):
            cap = min(cap, 1)
        for m in range(cap + 1):
            if m:
                cur[(i, j)] = m
            lc = list(left_col)
            lc[j - 1] -= m
            rec(i, j + 1, left_row - m, lc, cur)
            cur.pop((i, j), None)

    if rows == 0:
        return [Counter()] if sum(nu2) == 0 else []
    rec(1, 1, nu[0], list(nu2), {})
    return out


def multiset_basis_certificate(nu, nu2, W, W2, l: int) -> dict:
    """Reduced multisets: rank, spanning dimension, increasing-side count and Schur coefficient."""
    W, W2 = frozenset(W), frozenset(W2)
    n = sum(nu)
    Ms = compatible_multisets_with_content(nu, nu2, W, W2)
    red = [M for M in Ms if lds_general(M, W, W2) <= l]
    ops = lambda S: [T_matrix(T_multiset(M, nu, nu2, W, W2), l, n) for M in S]
    r = rank(ops(red)) if l >= 1 else len(red) if n == 0 else 0
    span = rank(ops(Ms)) if l >= 1 else r
    inc = sum(1 for M in Ms if lis_general(M, W, W2) <= l)
    coeff = schur_coefficient(nu, nu2, W, W2, l)
    # every non-reduced multiset straightens with an exact operator identity
    straight = True
    if l >= 1:
        for M in Ms:
            if lds_general(M, W, W2) > l:
                res = straighten_U_multiset(nu, nu2, W, W2, {_key(M): F(1)}, l)
                lhs = T_matrix(T_multiset(M, nu, nu2, W, W2), l, n)
                rhs: dict = {}
                for k, c in res.items():
                    _axpy(rhs, c, T_matrix(T_multiset(Counter(dict(k)), nu, nu2, W, W2), l, n))
                straight &= lhs == rhs
    return {"nu": list(nu), "nu2": list(nu2), "W": sorted(W), "W2": sorted(W2), "l": l,
            "size": len(red), "rank": r, "span_dim": span, "increasing_count": inc,
            "schur_coefficient": coeff, "straightening": straight,
            "ok": len(red) == r == span == inc == coeff and straight}


def schur_coefficient(nu, nu2, W, W2, l: int) -> int:
    """Coefficient of prod q_i^nu_i p_j^nu2_j in sum_{l(lam)<=l} s_lam(q_Wbar/q_W) s_lam(p/p)."""
    from .rsk import ModelSpec, schur_side
    vals = tuple(f"q{i}" for i in range(1, len(nu) + 1))
    vals2 = tuple(f"p{i}" for i in range(1, len(nu2) + 1))
    spec = ModelSpec("U", vals, frozenset(W), vals2, frozenset(W2))
    D = sum(nu) + sum(nu2)
    sr, val = schur_side(spec, l, D)
    ring = sr.ring
    exps = [0] * len(ring.names)
    for name, k in list(zip(vals, nu)) + list(zip(vals2, nu2)):
        exps[ring.names.index(name)] = k
    return int(val.coeff(exps))


# ---------------------------------------------------------------------------
# orthogonal and symplectic involution invariants


def fpf_involutions(m: int) -> list[Perm]:
    out = []

    def rec(p):
        try:
            x = p.index(0)
        except ValueError:
            out.append(tuple(p))
            return
        for y in range(x + 1, m):
            if not p[y]:
                q = p[:]
                q[x], q[y] = y + 1, x + 1
                rec(q)

    if m % 2 == 0:
        rec([0] * m)
    return sorted(out)


def _pairs(tau: Perm) -> list[tuple[int, int]]:
    return [(i, j) for i, j in enumerate(tau, 1) if i < j]


def invariant_vector(tau: Perm, l: int, kind: str) -> dict:
    """Basic invariant tensor of an fpf involution.

    O: sum over words with w_i = w_tau(i).  Sp: letters 1..2l, each pair
    i < tau(i) contributes J[w_i][w_tau(i)] with J = [[0, -I], [I, 0]].
    """
    pairs = _pairs(tau)
    m = len(tau)
    if kind == "O":
        out = {}
        for letters in product(range(1, l + 1), repeat=len(pairs)):
            w = [0] * m
            for (i, j), a in zip(pairs, letters):
                w[i - 1] = w[j - 1] = a
            out[tuple(w)] = F(1)
        return out
    if kind == "Sp":
        out = {}
        for letters in product(range(1, l + 1), repeat=len(pairs)):
            for flips in product((0, 1), repeat=len(pairs)):
                w = [0] * m
                sign = 1
                for (i, j), a, f in zip(pairs, letters, flips):
                    # J[a][a+l] = -1, J[a+l][a] = +1
                    if f:
                        w[i - 1], w[j - 1] = a + l, a
                    else:
                        w[i - 1], w[j - 1] = a, a + l
                        sign = -sign
                out[tuple(w)] = F(sign)
        return out
    raise ValueError(kind)


def act(pi: Perm, v: dict) -> dict:
    """T(pi) on a tensor: e_w -> e_{w o pi}."""
    n = len(pi)
    return {tuple(w[pi[j] - 1] for j in range(n)): c for w, c in v.items()}


def conjugate_involution(pi: Perm, tau: Perm) -> Perm:
    """pi^-1 tau pi."""
    return compose(inverse(pi), compose(tau, pi))


def sp_sign(rho: Perm, tau: Perm) -> int:
    """T(rho) v(tau) = sp_sign * v(rho^-1 tau rho) for the Sp invariant."""
    ri = inverse(rho)
    s = 1
    for i, j in _pairs(tau):
        if ri[i - 1] > ri[j - 1]:
            s = -s
    return s


def _upper_increasing(tau: Perm, length: int) -> tuple | None:
    """Positions x < tau(x) forming an increasing run of the given length."""
    up = [x for x in range(1, len(tau) + 1) if x < tau[x - 1]]
    best = {}
    for x in reversed(up):
        best[x] = 1 + max((best[y] for y in up if y > x and tau[y - 1] > tau[x - 1]), default=0)
    out, last, need = [], None, length
    for x in up:
        if need and best[x] >= need and (last is None or tau[x - 1] > tau[last - 1]):
            out.append(x)
            last, need = x, need - 1
    return tuple(out) if not need else None


def _nested_pairs(tau: Perm, count: int) -> tuple | None:
    """count pairs x_1 < ... < x_c < tau(x_c) < ... < tau(x_1): a symmetric decreasing run."""
    up = [x for x in range(1, len(tau) + 1) if x < tau[x - 1]]
    best = {}
    for x in reversed(up):
        best[x] = 1 + max((best[y] for y in up if y > x and tau[y - 1] < tau[x - 1]), default=0)
    out, last, need = [], None, count
    for x in up:
        if need and best[x] >= need and (last is None or tau[x - 1] < tau[last - 1]):
            out.append(x)
            last, need = x, need - 1
    return tuple(out) if not need else None


def orth_relation(tau: Perm, S: Sequence[int]) -> dict:
    """sum_rho sign(rho) v(tau_rho) = 0 where tau_rho pairs x with tau(rho(x)) on S."""
    out: dict = {}
    S = list(S)
    for img in permutations(S):
        sign = perm_sign([S.index(y) + 1 for y in img])
        t = list(tau)
        for x, y in zip(S, img):
            partner = tau[y - 1]
            t[x - 1] = partner
            t[partner - 1] = x
        _axpy(out, F(sign), {tuple(t): 1})
    return out


def symp_relation(tau: Perm, S: Sequence[int]) -> dict:
    """Antisymmetrize the slots in S (a tau-stable set): sum sign(rho) T(rho) v(tau) = 0."""
    m = len(tau)
    out: dict = {}
    for rho, s in _fixing(S, m):
        _axpy(out, F(s * sp_sign(rho, tau)), {conjugate_involution(rho, tau): 1})
    return out


def orth_reduce(e, l: int, n: int | None = None) -> dict:
    """Rewrite a combination of fpf involutions onto those with lis <= l (O(l) relations).

    Eliminated runs use only points x < tau(x); the new terms have strictly
    more inversions, so the least-inverted element is handled first.
    """
    e = dict(element(e) if not isinstance(e, dict) else e)
    while True:
        bad = [t for t in e if lis(t) > l]
        if not bad:
            return e
        tau = min(bad, key=lambda t: (inversions(t), t))
        S = _upper_increasing(tau, l + 1)
        if S is None:
            raise RuntimeError(f"no increasing run above the diagonal in {tau}")
        rel = orth_relation(tau, S)
        self_c = rel.pop(tau)
        c = e.pop(tau)
        for t, x in rel.items():
            _axpy(e, -c * x / self_c, {t: 1})


def symp_reduce(e, l: int, n: int | None = None) -> dict:
    """Rewrite onto fpf involutions with lds <= 2l (Sp(2l) relations).

    The eliminated run is symmetric about the diagonal: l+1 nested pairs.
    """
    e = dict(element(e) if not isinstance(e, dict) else e)
    while True:
        bad = [t for t in e if lds(t) > 2 * l]
        if not bad:
            return e
        tau = max(bad, key=lambda t: (inversions(t), t))
        xs = _nested_pairs(tau, l + 1)
        if xs is None:
            raise RuntimeError(f"no symmetric decreasing run in {tau}")
        S = sorted(set(xs) | {tau[x - 1] for x in xs})
        rel = symp_relation(tau, S)
        self_c = rel.pop(tau)
        c = e.pop(tau)
        for t, x in rel.items():
            _axpy(e, -c * x / self_c, {t: 1})


def involution_basis(n: int, l: int, kind: str) -> list[Perm]:
    invs = fpf_involutions(2 * n)
    if kind == "O":
        return [t for t in invs if lis(t) <= l]
    return [t for t in invs if lds(t) <= 2 * l]


def _combine(e: dict, l: int, kind: str) -> dict:
    out: dict = {}
    for t, c in e.items():
        _axpy(out, c, invariant_vector(t, l, kind))
    return out


def involution_certificate(n: int, l: int, kind: str) -> dict:
    """Reduced set: full rank, spans all basic invariants, reductions exact."""
    if kind not in ("O", "Sp"):
        raise DomainError(kind)
    invs = fpf_involutions(2 * n)
    B = involution_basis(n, l, kind)
    dimV = l if kind == "O" else 2 * l
    if dimV ** (2 * n) > MAX_WORDS:
        raise ResourceError("tensor space too large")
    vec = lambda t: invariant_vector(t, l, kind)
    r = rank(vec(t) for t in B)
    span = rank(vec(t) for t in invs)
    reduce = orth_reduce if kind == "O" else symp_reduce
    exact = True
    for t in invs:
        if t not in B:
            out = reduce({t: F(1)}, l)
            exact &= all(s in B for s in out) and _combine(out, l, kind) == vec(t)
    count = f_count("O", n, l) if kind == "O" else f_count("S", n, 2 * l)
    return {"n": n, "l": l, "kind": kind, "size": len(B), "rank": r, "span_dim": span,
            "f": count, "reductions_exact": exact,
            "ok": len(B) == r == span == count and exact}


def equivariance_checks(n: int, l: int, trials: int = 20, seed: int = 0) -> dict:
    """T(pi) v_O(tau) = v_O(pi^-1 tau pi), and T(pi) v_Sp(tau) = sign(pi) v_Sp(tau) when pi commutes."""
    import random
    rng = random.Random(seed)
    invs = fpf_involutions(2 * n)
    o_ok = sp_ok = comm_ok = True
    for _ in range(trials):
        tau = rng.choice(invs)
        pi = tuple(rng.sample(range(1, 2 * n + 1), 2 * n))
        t2 = conjugate_involution(pi, tau)
        o_ok &= act(pi, invariant_vector(tau, l, "O")) == invariant_vector(t2, l, "O")
        v = invariant_vector(tau, l, "Sp")
        w = {k: sp_sign(pi, tau) * c for k, c in invariant_vector(t2, l, "Sp").items()}
        sp_ok &= act(pi, v) == w
    # every element of S_2n commuting with tau
    for tau in invs[:3]:
        for pi in permutations(range(1, 2 * n + 1)):
            if compose(pi, tau) == compose(tau, pi):
                v = invariant_vector(tau, l, "Sp")
                s = perm_sign(pi)
                comm_ok &= act(pi, v) == {k: s * c for k, c in v.items()}
    return {"O_conjugation": o_ok, "Sp_sign_rule": sp_ok, "Sp_commuting": comm_ok}
