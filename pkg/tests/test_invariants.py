import random
from collections import Counter
from fractions import Fraction as F
from itertools import combinations, permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from incseq.combinat import compose, f_count, inversions, lds, lis, partitions
from incseq.invariants import (
    MAX_WORDS, DomainError, ResourceError, T_matrix, act, basis_U, basis_U_certificate,
    centralizer_dim_check, compose_operators, conjugate_involution, element, equivariance_checks,
    fpf_involutions, involution_basis, involution_certificate, invariant_vector, kernel_element,
    multiset_basis_certificate, orth_reduce, sp_sign, straighten_U, straighten_U_multiset,
    straighten_certificate, symp_reduce, triangularity_witness, words, _combine, _key,
)

perms = st.integers(1, 5).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


def identity_op(l, n):
    return {(w, w): 1 for w in words(l, n)}


# tensor operators

def test_identity_operator():
    for n in range(1, 4):
        assert T_matrix(tuple(range(1, n + 1)), 2, n) == identity_op(2, n)


def test_transposition_n2_l2():
    T = T_matrix((2, 1), 2)
    assert T == {((1, 1), (1, 1)): 1, ((2, 2), (2, 2)): 1,
                 ((2, 1), (1, 2)): 1, ((1, 2), (2, 1)): 1}


def test_T_matrix_domain():
    with pytest.raises(DomainError):
        T_matrix((1,), 0)


def test_word_guard():
    with pytest.raises(ResourceError):
        words(10, 6)
    assert MAX_WORDS == 10 ** 5


@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.permutations(list(range(1, n + 1))), st.permutations(list(range(1, n + 1))))))
def test_T_is_anti_homomorphism(pq):
    # oracle: multiply the sparse operators directly
    p, q = map(tuple, pq)
    lhs = T_matrix(compose(p, q), 2)
    assert lhs == compose_operators(T_matrix(q, 2), T_matrix(p, 2))


def test_element_linear_extension():
    e = element([((2, 1), 3), ((1, 2), -1)])
    T = T_matrix(e, 2)
    want = {}
    for k, v in T_matrix((2, 1), 2).items():
        want[k] = want.get(k, 0) + 3 * v
    for k, v in T_matrix((1, 2), 2).items():
        want[k] = want.get(k, 0) - v
    assert T == {k: v for k, v in want.items() if v}


# kernel lemma

def test_kernel_examples():
    assert kernel_element((1, 2), (1, 2)) == {(1, 2): 1, (2, 1): -1}
    assert T_matrix(kernel_element((1, 2), (1, 2)), 1) == {}
    assert T_matrix(kernel_element((1, 2, 3), (1, 2, 3)), 2) == {}


def test_kernel_exhaustive():
    for n in range(1, 5):
        for l in range(1, 4):
            for pi in permutations(range(1, n + 1)):
                for r in range(l + 1, n + 1):
                    for S in combinations(range(1, n + 1), r):
                        assert T_matrix(kernel_element(pi, S, n), l, n) == {}


def test_kernel_small_S_is_nonzero():
    # witness: distinct letters on S survive the antisymmetrizer
    for n in range(1, 5):
        for l in range(1, 4):
            for r in range(1, min(l, n) + 1):
                for S in combinations(range(1, n + 1), r):
                    assert T_matrix(kernel_element(tuple(range(1, n + 1)), S, n), l, n)


# straightening for U(l)

def test_straighten_transposition():
    assert straighten_U((2, 1), 1) == {(1, 2): 1}


def test_straighten_321():
    out = straighten_U((3, 2, 1), 2)
    assert len(out) == 5 and (3, 2, 1) not in out
    assert all(abs(c) == 1 for c in out.values())
    assert T_matrix(out, 2, 3) == T_matrix((3, 2, 1), 2)
    cert = straighten_certificate((3, 2, 1), 2)
    assert cert["reduced"] and cert["equal_operator"]


def test_reduced_input_unchanged():
    e = {(1, 3, 2): F(2), (2, 1, 3): F(-1, 3)}
    assert straighten_U(e, 2) == e


@settings(max_examples=60, deadline=None)
@given(perms, st.integers(1, 3))
def test_straighten_properties(p, l):
    trace = []
    out = straighten_U({p: F(1)}, l, trace)
    assert all(lds(q) <= l for q in out)
    assert T_matrix(out, l, len(p)) == T_matrix(p, l)
    # eliminated permutations appear in non-increasing inversion order
    inv = [inversions(step["perm"]) for step in trace]
    assert inv == sorted(inv, reverse=True)


def test_straighten_domain():
    with pytest.raises(DomainError):
        straighten_U((1,), -1)


# bases for U(l)

def test_basis_small_examples():
    for n in range(4):
        for l in range(n, 4):
            if l:
                assert len(basis_U(n, l)) == factorial(n)
    assert len(basis_U(3, 2)) == 5
    assert basis_U(4, 1) == [(1, 2, 3, 4)]
    assert len(basis_U(4, 2)) == 14


def hook_count(lam):
    # number of standard tableaux by the hook length formula
    n = sum(lam)
    conj = [sum(1 for r in lam if r > j) for j in range(lam[0])] if lam else []
    h = 1
    for i, r in enumerate(lam):
        for j in range(r):
            h *= r - j + conj[j] - i - 1
    return factorial(n) // h


def test_basis_size_hook_oracle():
    for n in range(7):
        for l in range(1, 4):
            want = sum(hook_count(lam) ** 2 for lam in partitions(n) if len(lam) <= l)
            assert len(basis_U(n, l)) == want == f_count("U", n, l)


@pytest.mark.parametrize("n,l", [(2, 1), (3, 2), (4, 2), (4, 3), (5, 2)])
def test_basis_certificate(n, l):
    cert = basis_U_certificate(n, l)
    assert cert["ok"] and cert["triangular"], cert


def test_triangularity_witness():
    for n in range(1, 6):
        for l in range(1, 4):
            assert triangularity_witness(n, l)


def test_centralizer_dimensions():
    assert centralizer_dim_check(2, 1)["dim"] == 1
    assert centralizer_dim_check(3, 2)["dim"] == 5
    r = centralizer_dim_check(4, 2)
    assert r["dim"] == 14 and r["ok"]


# multisets

def test_multiset_trivial_compositions_match_permutations():
    nu = (1, 1, 1)
    cert = multiset_basis_certificate(nu, nu, (), (), 2)
    assert cert["ok"] and cert["size"] == 5 == len(basis_U(3, 2))


def test_multiset_incompatible_rejected():
    M = Counter({(1, 1): 2})
    with pytest.raises(DomainError):
        straighten_U_multiset((2,), (2,), {1}, (), {_key(M): F(1)}, 1)


@pytest.mark.parametrize("nu,nu2,W,W2,l", [
    ((2,), (1, 1), {1}, (), 1),
    ((2,), (1, 1), (), (), 1),
    ((1, 2), (2, 1), {2}, {1}, 2),
    ((2, 1), (1, 2), {1}, (), 2),
    ((1, 1, 1), (2, 1), {2}, {2}, 2),
    ((2, 2), (2, 2), {1}, {2}, 1),
])
def test_multiset_certificates(nu, nu2, W, W2, l):
    cert = multiset_basis_certificate(nu, nu2, W, W2, l)
    assert cert["ok"], cert


# orthogonal and symplectic invariants

def test_fpf_involution_counts():
    assert [len(fpf_involutions(m)) for m in range(7)] == [1, 0, 1, 0, 3, 0, 15]


def test_invariant_vector_small():
    assert invariant_vector((2, 1), 2, "O") == {(1, 1): 1, (2, 2): 1}
    assert invariant_vector((2, 1), 1, "Sp") == {(1, 2): -1, (2, 1): 1}
    with pytest.raises(ValueError):
        invariant_vector((2, 1), 1, "Q")


def test_n1_unchanged():
    for l in (1, 2, 3):
        assert orth_reduce({(2, 1): F(1)}, l) == {(2, 1): 1}
        assert symp_reduce({(2, 1): F(1)}, l) == {(2, 1): 1}


def test_orthogonal_n2_l1():
    # in one dimension every invariant is the single word 1111
    assert involution_basis(2, 1, "O") == [(4, 3, 2, 1)]
    out = orth_reduce({(2, 1, 4, 3): F(1)}, 1)
    assert out == {(4, 3, 2, 1): 1}


@pytest.mark.parametrize("kind", ["O", "Sp"])
def test_involution_certificates(kind):
    for n in range(1, 4):
        for l in (1, 2):
            cert = involution_certificate(n, l, kind)
            assert cert["ok"], cert


def test_involution_certificate_domain():
    with pytest.raises(DomainError):
        involution_certificate(1, 1, "U")


def test_orth_reduction_moves_up_in_inversions():
    for tau in fpf_involutions(6):
        if lis(tau) > 1:
            out = orth_reduce({tau: F(1)}, 1)
            assert all(inversions(t) > inversions(tau) for t in out)


def test_symp_reduction_exact():
    for tau in fpf_involutions(6):
        out = symp_reduce({tau: F(1)}, 1)
        assert all(lds(t) <= 2 for t in out)
        assert _combine(out, 1, "Sp") == invariant_vector(tau, 1, "Sp")


def test_equivariance():
    for n in (1, 2, 3):
        rep = equivariance_checks(n, 2 if n < 3 else 1, trials=15, seed=n)
        assert all(rep.values()), rep


def test_sp_sign_law_when_commuting():
    tau = (2, 1, 4, 3)
    pi = (3, 4, 1, 2)
    assert compose(pi, tau) == compose(tau, pi)
    v = invariant_vector(tau, 1, "Sp")
    assert act(pi, v) == v  # even permutation
    swap = (2, 1, 3, 4)
    assert act(swap, v) == {k: -c for k, c in v.items()}
    assert sp_sign(swap, tau) == -1 and conjugate_involution(swap, tau) == tau


def test_orthogonal_conjugation_random():
    rng = random.Random(5)
    invs = fpf_involutions(6)
    for _ in range(20):
        tau = rng.choice(invs)
        pi = tuple(rng.sample(range(1, 7), 6))
        assert act(pi, invariant_vector(tau, 2, "O")) == invariant_vector(conjugate_involution(pi, tau), 2, "O")
