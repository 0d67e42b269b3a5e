"""Partitions, permutations, the symmetry ensembles and brute-force counts.

Permutations are tuples in one-line notation on 1..n.  Enumeration
streams are sorted lexicographically so reports are reproducible.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterator, Sequence

Perm = tuple


# ---------------------------------------------------------------------------
# increasing subsequences


def lis(word: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence (patience)."""
    piles: list = []
    for a in word:
        k = bisect_left(piles, a)
        if k == len(piles):
            piles.append(a)
        else:
            piles[k] = a
    return len(piles)


def lds(word: Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence."""
    return lis([-a for a in word])


def lis_bruteforce(word: Sequence[int]) -> int:
    """Oracle: try every subsequence, longest first."""
    n = len(word)
    for k in range(n, 0, -1):
        for idx in combinations(range(n), k):
            if all(word[idx[i]] < word[idx[i + 1]] for i in range(k - 1)):
                return k
    return 0


def _longest_nonincreasing(word: Sequence[int]) -> int:
    piles: list = []
    for a in word:
        k = bisect_right(piles, -a)
        if k == len(piles):
            piles.append(-a)
        else:
            piles[k] = -a
    return len(piles)


def greene_profile(word: Sequence[int], k: int, decreasing: bool = False) -> int:
    """Largest union of k increasing (or decreasing) subsequences.

    Exhaustive: a set of positions splits into k strictly increasing
    subsequences exactly when it has no weakly decreasing subsequence
    longer than k.
    """
    n = len(word)
    if k >= n:
        return n
    w = [-a for a in word] if decreasing else list(word)
    for size in range(n, 0, -1):
        for idx in combinations(range(n), size):
            if _longest_nonincreasing([w[i] for i in idx]) <= k:
                return size
    return 0


# ---------------------------------------------------------------------------
# permutations


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def iota(n: int) -> Perm:
    """The reversal x -> n+1-x."""
    return tuple(range(n, 0, -1))


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(x) = p(q(x))."""
    return tuple(p[x - 1] for x in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p, 1):
        out[x - 1] = i
    return tuple(out)


def fixed_points(p: Perm) -> int:
    return sum(1 for i, x in enumerate(p, 1) if i == x)


def inversions(p: Sequence[int]) -> int:
    return sum(1 for i, j in combinations(range(len(p)), 2) if p[i] > p[j])


def is_involution(p: Perm) -> bool:
    return all(p[x - 1] == i for i, x in enumerate(p, 1))


# ---------------------------------------------------------------------------
# partitions


def partitions(n: int, maxpart: int | None = None) -> Iterator[tuple]:
    """Partitions of n in reverse lexicographic order."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def partitions_upto(d: int) -> Iterator[tuple]:
    for n in range(d + 1):
        yield from partitions(n)


def conjugate(lam: Sequence[int]) -> tuple:
    lam = [p for p in lam if p]
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def odd_parts(lam: Sequence[int]) -> int:
    """f(lambda): the number of odd parts."""
    return sum(1 for p in lam if p % 2)


def plus_part(lam: Sequence[int]) -> tuple:
    """(lambda_1, lambda_3, ...)."""
    return tuple(lam[0::2])


def minus_part(lam: Sequence[int]) -> tuple:
    """(lambda_2, lambda_4, ...)."""
    return tuple(lam[1::2])


def doubled(lam: Sequence[int]) -> tuple:
    """2 lambda: every part doubled."""
    return tuple(2 * p for p in lam)


def squared(lam: Sequence[int]) -> tuple:
    """lambda^2: every part repeated twice."""
    return tuple(p for p in lam for _ in range(2))


def _beta_set(lam: Sequence[int], beads: int) -> list[int]:
    lam = list(lam) + [0] * (beads - len(lam))
    return [lam[i] + beads - 1 - i for i in range(beads)]


def _from_beta(beta: Sequence[int]) -> tuple:
    b = sorted(beta, reverse=True)
    m = len(b)
    return tuple(p for p in (b[i] - (m - 1 - i) for i in range(m)) if p)


def two_core_quotient(lam: Sequence[int]) -> tuple[tuple, tuple[tuple, tuple]]:
    """2-core and 2-quotient by the two-runner abacus.

    The bead count is the length padded to an even number; runner r holds
    the beads at positions congruent to r mod 2.  Returns
    (core, (quotient_0, quotient_1)).
    """
    lam = tuple(p for p in lam if p)
    beads = len(lam) + len(lam) % 2
    beta = _beta_set(lam, beads)
    runners = ([b // 2 for b in beta if b % 2 == 0], [b // 2 for b in beta if b % 2 == 1])
    quot = tuple(_from_beta(r) for r in runners)
    pushed = [2 * k for k in range(len(runners[0]))] + [2 * k + 1 for k in range(len(runners[1]))]
    return _from_beta(pushed), quot


def from_core_quotient(core: Sequence[int], quot: Sequence[Sequence[int]]) -> tuple:
    """Inverse of :func:`two_core_quotient`."""
    core = tuple(core)
    # a 2-core is a staircase; find bead counts per runner that rebuild it
    for beads in range(0, 2 * (len(core) + max(len(quot[0]), len(quot[1])) + 2) + 1, 2):
        if beads < len(core):
            continue
        beta = _beta_set(core, beads)
        runs = ([b // 2 for b in beta if b % 2 == 0], [b // 2 for b in beta if b % 2 == 1])
        if any(len(runs[r]) < len(quot[r]) for r in (0, 1)):
            continue
        new = []
        for r in (0, 1):
            m = len(runs[r])
            q = list(quot[r]) + [0] * (m - len(quot[r]))
            new += [2 * (q[i] + m - 1 - i) + r for i in range(m)]
        lam = _from_beta(new)
        # the padded bead count must match the one two_core_quotient uses
        if two_core_quotient(lam) == (core, tuple(tuple(q) for q in quot)):
            return lam
    raise ValueError("no partition with this core and quotient")


def has_trivial_two_core(lam: Sequence[int]) -> bool:
    return two_core_quotient(lam)[0] == ()


def hook_lengths_syt(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape lambda."""
    lam = [p for p in lam if p]
    n = sum(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= row - j + conj[j] - i - 1
    return factorial(n) // prod


@dataclass(frozen=True)
class PartitionRecord:
    parts: tuple
    conjugate: tuple
    f: int
    f_conjugate: int
    core: tuple
    quotient: tuple
    plus: tuple
    minus: tuple
    doubled: tuple
    squared: tuple


def partition_tools(lam: Sequence[int]) -> PartitionRecord:
    lam = tuple(p for p in lam if p)
    core, quot = two_core_quotient(lam)
    conj = conjugate(lam)
    return PartitionRecord(lam, conj, odd_parts(lam), odd_parts(conj), core, quot,
                           plus_part(lam), minus_part(lam), doubled(lam), squared(lam))


# ---------------------------------------------------------------------------
# symmetry ensembles


@dataclass(frozen=True)
class SymmetryType:
    tag: str
    a_const: int | None

    def __str__(self):
        return self.tag


SYMMETRIES = {
    "U": SymmetryType("U", 2),
    "O": SymmetryType("O", 1),
    "S": SymmetryType("S", 1),
    "UU": SymmetryType("UU", 4),
    "u": SymmetryType("u", 2),
    "rot": SymmetryType("rot", None),
}


def symmetry(tag) -> SymmetryType:
    if isinstance(tag, SymmetryType):
        return tag
    try:
        return SYMMETRIES[tag]
    except KeyError:
        raise ValueError(f"unknown symmetry {tag!r}") from None


def _pairings(points: list) -> Iterator[dict]:
    """Perfect matchings of ``points`` as partner dicts."""
    if not points:
        yield {}
        return
    x = points[0]
    for k in range(1, len(points)):
        y = points[k]
        rest = points[1:k] + points[k + 1:]
        for m in _pairings(rest):
            m = dict(m)
            m[x] = y
            m[y] = x
            yield m


def _fpf_involutions(m: int) -> Iterator[Perm]:
    for d in _pairings(list(range(1, m + 1))):
        yield tuple(d[i] for i in range(1, m + 1))


def _involutions(m: int) -> Iterator[Perm]:
    for k in range(0, m + 1, 2):
        for moved in combinations(range(1, m + 1), k):
            for d in _pairings(list(moved)):
                yield tuple(d.get(i, i) for i in range(1, m + 1))


def _signed(n: int) -> Iterator[Perm]:
    """pi in S_2n with pi = iota pi iota."""
    m = 2 * n
    for sigma in permutations(range(1, n + 1)):
        for signs in range(1 << n):
            p = [0] * m
            for x in range(1, n + 1):
                y = sigma[x - 1]
                if signs >> (x - 1) & 1:
                    y = m + 1 - y
                p[x - 1] = y
                p[m - x] = m + 1 - y
            yield tuple(p)


def _four_orbits(m: int, rotation: bool) -> Iterator[Perm]:
    """Fill S_m (m divisible by 4) orbit by orbit.

    rotation=False: involutions commuting with iota, no point fixed by
    pi or pi*iota.  rotation=True: pi^2 = iota.
    """
    def rec(p: list):
        try:
            x = p.index(0) + 1
        except ValueError:
            yield tuple(p)
            return
        ix = m + 1 - x
        for y in range(1, m + 1):
            if p[y - 1] or y in (x, ix):
                continue
            iy = m + 1 - y
            if rotation:
                orbit = {x: y, y: ix, ix: iy, iy: x}
            else:
                orbit = {x: y, y: x, ix: iy, iy: ix}
            q = p[:]
            for a, b in orbit.items():
                q[a - 1] = b
            yield from rec(q)

    yield from rec([0] * m)


def _enumerate_raw(tag: str, n: int) -> Iterator[Perm]:
    if tag == "U":
        yield from permutations(range(1, n + 1))
    elif tag == "O":
        yield from _fpf_involutions(2 * n)
    elif tag == "S":
        i = iota(2 * n)
        for s in _fpf_involutions(2 * n):
            yield compose(s, i)
    elif tag == "UU":
        yield from _signed(n)
    elif tag == "u":
        yield from _four_orbits(4 * n, rotation=False)
    elif tag == "rot":
        yield from _four_orbits(4 * n, rotation=True)
    else:
        raise ValueError(f"unknown symmetry {tag!r}")


def ensemble_enumerate(sym, n: int) -> Iterator[Perm]:
    """Members of the ensemble for ``sym`` at size n, lexicographic."""
    return iter(sorted(_enumerate_raw(symmetry(sym).tag, n)))


def ensemble_size(sym, n: int) -> int:
    """Closed-form ensemble sizes."""
    tag = symmetry(sym).tag
    if tag == "U":
        return factorial(n)
    if tag in ("O", "S"):
        return factorial(2 * n) // (2 ** n * factorial(n))
    if tag == "UU":
        return 2 ** n * factorial(n)
    return factorial(2 * n) // factorial(n)


@lru_cache(maxsize=None)
def lis_distribution(tag: str, n: int) -> Counter:
    return Counter(lis(p) for p in _enumerate_raw(tag, n))


def f_count(sym, n: int, l: int) -> int:
    """Ensemble members with no increasing subsequence longer than l."""
    dist = lis_distribution(symmetry(sym).tag, n)
    return sum(c for k, c in dist.items() if k <= l)


def rotation_lis_profile(n: int) -> Counter:
    """Distribution of max(2 lis, 2 lds - 1) over S_n, scaled by C(2n, n)."""
    out: Counter = Counter()
    for p in permutations(range(1, n + 1)):
        out[max(2 * lis(p), 2 * lds(p) - 1)] += comb(2 * n, n)
    return out


# ---------------------------------------------------------------------------
# extended ensembles with diagonal points


def tilde_enumerate(sym, n: int) -> Iterator[tuple[Perm, tuple]]:
    """Pairs (pi, fixed counts) of the extended ensembles.

    O: involutions of S_n, counts (fix pi,).
    S: pi in S_n with pi = iota pi^-1 iota, counts (fix pi*iota,).
    u: involutions of S_2n commuting with iota,
       counts (fix(pi)/2, fix(pi*iota)/2).
    """
    tag = symmetry(sym).tag
    if tag == "O":
        for p in _involutions(n):
            yield p, (fixed_points(p),)
    elif tag == "S":
        i = iota(n)
        for s in _involutions(n):
            yield compose(s, i), (fixed_points(s),)
    elif tag == "u":
        m = 2 * n
        i = iota(m)
        for p in _involutions(m):
            if compose(p, i) == compose(i, p):
                yield p, (fixed_points(p) // 2, fixed_points(compose(p, i)) // 2)
    else:
        raise ValueError("extended ensembles exist for O, S and u only")


@lru_cache(maxsize=None)
def tilde_table(tag: str, n: int) -> Counter:
    """Counter over (fixed counts, lis)."""
    return Counter((m, lis(p)) for p, m in tilde_enumerate(tag, n))


def ftilde_count(sym, n: int, fixed_counts, l: int) -> int:
    if isinstance(fixed_counts, int):
        fixed_counts = (fixed_counts,)
    table = tilde_table(symmetry(sym).tag, n)
    return sum(c for (m, k), c in table.items() if m == tuple(fixed_counts) and k <= l)


def tilde_size(sym, n: int) -> int:
    return sum(tilde_table(symmetry(sym).tag, n).values())


def convolution_identities_check(n: int, l: int) -> bool:
    uu = f_count("UU", n, 2 * l)
    conv = sum(comb(n, m) ** 2 * f_count("U", m, l) * f_count("U", n - m, l)
               for m in range(n + 1))
    return uu == conv and f_count("u", n, 2 * l) == comb(2 * n, n) * f_count("U", n, l)
