from math import comb

import pytest
from hypothesis import given, strategies as st

from incseq.combinat import (
    compose, conjugate, convolution_identities_check, ensemble_enumerate, ensemble_size,
    f_count, fixed_points, from_core_quotient, ftilde_count, greene_profile, inverse, iota,
    lds, lis, lis_bruteforce, partition_tools, partitions, partitions_upto,
    rotation_lis_profile, symmetry, tilde_enumerate, tilde_size, two_core_quotient,
)

SYMS = ("U", "O", "S", "UU", "u")

words = st.lists(st.integers(0, 9), max_size=9)
perms = st.integers(0, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def _from_parts(parts):
    return tuple(sorted((p for p in parts if p), reverse=True))


parts_st = st.lists(st.integers(0, 6), max_size=6).map(_from_parts)


# lis

def test_lis_examples():
    assert lis((1, 2, 3)) == 3
    assert lis((3, 2, 1)) == 1
    assert lis((3, 1, 4, 2)) == 2 == lis_bruteforce((3, 1, 4, 2))
    assert lis(()) == 0


@given(words)
def test_lis_matches_bruteforce(w):
    assert lis(w) == lis_bruteforce(w)
    assert lds(w) == lis_bruteforce([-x for x in w])


@given(perms)
def test_erdos_szekeres(p):
    assert lis(p) * lds(p) >= len(p)


def test_greene_examples():
    assert greene_profile((2, 1), 1) == 1
    assert greene_profile((3, 1, 4, 2), 2) == 4
    assert greene_profile((3, 1, 4, 2), 7) == 4
    assert greene_profile((3, 1, 4, 2), 1, decreasing=True) == 2


@given(st.lists(st.integers(0, 5), max_size=6), st.integers(1, 3))
def test_greene_k1_is_lis(w, k):
    assert greene_profile(w, 1) == lis(w)
    assert greene_profile(w, k) <= min(len(w), k * max(lis(w), 1))


# permutations

@given(perms)
def test_inverse_and_compose(p):
    n = len(p)
    ident = tuple(range(1, n + 1))
    assert compose(p, inverse(p)) == ident == compose(inverse(p), p)
    assert compose(iota(n), iota(n)) == ident


# ensembles

def test_ensemble_sizes_examples():
    assert ensemble_size("U", 3) == 6
    assert ensemble_size("O", 3) == 15
    assert ensemble_size("rot", 1) == 2


@pytest.mark.parametrize("sym", SYMS + ("rot",))
def test_enumeration_matches_closed_form(sym):
    for n in range(4):
        members = list(ensemble_enumerate(sym, n))
        assert len(members) == len(set(members)) == ensemble_size(sym, n)
        assert members == sorted(members)


def test_ensemble_defining_conditions():
    for n in range(4):
        m = 2 * n
        for p in ensemble_enumerate("O", n):
            assert p == inverse(p) and fixed_points(p) == 0
        for p in ensemble_enumerate("S", n):
            s = compose(p, iota(m))
            assert s == inverse(s) and fixed_points(s) == 0
        for p in ensemble_enumerate("UU", n):
            assert compose(iota(m), compose(p, iota(m))) == p
        for p in ensemble_enumerate("rot", n):
            assert compose(p, p) == iota(4 * n)


def test_unknown_symmetry():
    with pytest.raises(ValueError):
        symmetry("Q")
    assert symmetry("UU").a_const == 4 and symmetry("O").a_const == 1


def test_f_count_examples():
    assert f_count("U", 3, 2) == 5
    assert f_count("O", 2, 1) == 1
    assert [p for p in ensemble_enumerate("O", 2) if lis(p) <= 1] == [(4, 3, 2, 1)]


@pytest.mark.parametrize("sym", SYMS)
def test_f_count_monotone_and_saturates(sym):
    for n in range(5):
        counts = [f_count(sym, n, l) for l in range(4 * n + 1)]
        assert counts == sorted(counts)
        assert f_count(sym, n, 4 * n) == ensemble_size(sym, n)


def test_f_count_parity_collapse():
    for n in range(5):
        for l in range(4):
            assert f_count("S", n, 2 * l + 1) == f_count("S", n, 2 * l)
            assert f_count("u", n, 2 * l + 1) == f_count("u", n, 2 * l)


def test_rotation_vanishing_beyond_square():
    for n in range(3):
        for l in range(3):
            if n > l * l:
                assert f_count("rot", n, l) == 0


def test_rotation_lis_profile_matches_bruteforce():
    for n in range(3):
        prof = rotation_lis_profile(n)
        for l in range(6):
            assert f_count("rot", n, l) == sum(c for k, c in prof.items() if k <= l)


def test_ftilde_examples():
    assert ftilde_count("O", 3, 1, 2) == 3
    for n in range(5):
        for l in range(6):
            assert ftilde_count("O", n, n, l) == (1 if l >= n else 0)
    for l in range(1, 4):
        assert ftilde_count("S", 1, 1, l) == 1


@pytest.mark.parametrize("sym", ("O", "S", "u"))
def test_ftilde_sums_to_size(sym):
    for n in range(5):
        keys = {m for _, m in tilde_enumerate(sym, n)}
        assert sum(ftilde_count(sym, n, m, 4 * n) for m in keys) == tilde_size(sym, n)


def test_tilde_sizes_are_involution_counts():
    inv = [1, 1, 2, 4, 10, 26]
    assert [tilde_size("O", n) for n in range(6)] == inv
    assert [tilde_size("S", n) for n in range(6)] == inv


def test_convolution_identities():
    assert f_count("u", 1, 2) == comb(2, 1) * f_count("U", 1, 1) == 2
    for n in range(4):
        for l in range(4):
            assert convolution_identities_check(n, l)


# partitions

def test_partition_examples():
    r = partition_tools((3, 1))
    assert r.conjugate == (2, 1, 1) and r.f == 2
    r = partition_tools((3, 2, 1))
    assert r.plus == (3, 1) and r.minus == (2,)
    assert r.doubled == (6, 4, 2) and r.squared == (3, 3, 2, 2, 1, 1)
    core, quot = two_core_quotient((2, 2))
    assert core == ()
    assert quot == ((1,), (1,))


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert sum(1 for _ in partitions_upto(4)) == 1 + 1 + 2 + 3 + 5


@given(parts_st)
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam


@given(parts_st)
def test_core_quotient_round_trip(lam):
    core, quot = two_core_quotient(lam)
    size = sum(core) + 2 * sum(sum(q) for q in quot)
    assert size == sum(lam)
    assert from_core_quotient(core, quot) == lam


def test_two_cores_are_staircases():
    for n in range(9):
        for lam in partitions(n):
            core, _ = two_core_quotient(lam)
            k = len(core)
            assert core == tuple(range(k, 0, -1))


def test_domino_tileable_count():
    # partitions of 2n with empty 2-core are counted by pairs of partitions of total n
    pcount = [sum(1 for _ in partitions(k)) for k in range(5)]
    for n in range(5):
        empty = sum(1 for lam in partitions(2 * n) if two_core_quotient(lam)[0] == ())
        assert empty == sum(pcount[a] * pcount[n - a] for a in range(n + 1))


@given(st.lists(st.integers(0, 3), max_size=7), st.integers(1, 3), st.booleans())
def test_greene_matches_union_search(w, k, dec):
    # oracle: try every assignment of positions to k chains (or to no chain)
    from itertools import product
    sign = -1 if dec else 1
    best = 0
    for labels in product(range(k + 1), repeat=len(w)):
        chains = [[sign * w[i] for i in range(len(w)) if labels[i] == c] for c in range(1, k + 1)]
        if all(all(a < b for a, b in zip(c, c[1:])) for c in chains):
            best = max(best, sum(map(len, chains)))
    assert greene_profile(w, k, decreasing=dec) == best
