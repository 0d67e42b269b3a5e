from fractions import Fraction as F

import pytest

from incseq.combinat import partitions_upto
from incseq.symfunc import (
    TAGS, Alphabet, SymRing, UsageError, identity_ring, pfaffian_route_O, schur_sum,
    schur_tableaux, szego_super_check, verify_identity,
)


def ring_xy(k=2, m=0, D=6, params=None):
    return SymRing(D, (Alphabet("x", k, m),), params)


def test_h_small():
    sr = ring_xy()
    x1, x2 = sr.var("x1"), sr.var("x2")
    assert sr.h(1) == x1 + x2
    assert sr.h(0) == sr.one()
    assert sr.h(-1) == sr.zero()
    assert sr.e(2) == x1 * x2


def test_super_h2():
    sr = ring_xy(k=1, m=1, D=4)
    x, y = sr.var("x1"), sr.var("x~1")
    assert sr.h(2) == x * x + x * y


def test_h_e_generating_functions_invert():
    sr = SymRing(6, (Alphabet("x", 3, 1),), {"u": None})
    assert sr.E("u") * sr.H(sr.const("u") * -1) == sr.one()


def test_schur_small():
    sr = ring_xy()
    x1, x2 = sr.var("x1"), sr.var("x2")
    assert sr.schur((1,)) == x1 + x2
    assert sr.schur((2, 1)) == x1 * x1 * x2 + x1 * x2 * x2
    assert sr.schur((1, 1, 1)) == sr.zero()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_schur_jacobi_trudi_vs_tableaux(k):
    sr = ring_xy(k=k, D=6)
    for lam in partitions_upto(6):
        assert sr.schur(lam) == schur_tableaux(sr, lam)


def test_super_schur_specializes():
    plain = ring_xy(k=2, m=0, D=5)
    sup = ring_xy(k=2, m=1, D=5)
    for lam in partitions_upto(5):
        s = sup.schur(lam).subs({"x~1": sup.zero()}, sup.ring)
        assert s == plain.schur(lam).subs({}, sup.ring)
        assert sup.schur_super_check(lam)


def test_schur_tilde_examples():
    sr = ring_xy(k=3, D=4)
    assert sr.schur_tilde((1,)) == sr.zero()
    assert sr.schur_tilde((2,)) == sr.h(1)
    assert sr.schur_tilde_phi2((2,)) == sr.h(1)
    assert sr.schur_tilde((1, 1)) == sr.h(1)
    assert sr.schur_tilde_phi2((1, 1)) == sr.h(1)


def test_schur_tilde_routes_agree():
    sr = ring_xy(k=3, D=4)
    for lam in partitions_upto(8):
        assert sr.schur_tilde(lam) == sr.schur_tilde_phi2(lam), lam


def test_perp_operators():
    sr = SymRing(5, (Alphabet("x", 0, 0, "free"),), {"a": None, "u": None})
    a, u = sr.var("a"), sr.var("u")
    Hu = sr.H(u)
    assert sr.perp("E", Hu, a) == (sr.one() + a * u) * Hu
    assert sr.perp("H", Hu, sr.zero()) == Hu
    assert sr.perp("H", Hu, a) == (sr.one() - a * u).inverse() * Hu
    assert sr.perp("E", sr.schur((1,)), a) == sr.schur((1,)) + a
    with pytest.raises(UsageError):
        sr.perp("Q", Hu, a)


def test_schur_sum_basics():
    sr = identity_ring(3, 4, 3)
    assert schur_sum(sr, "all", 0) == sr.one()
    oa = schur_sum(sr, "O-alpha", 3, alpha="a")
    assert oa.homogeneous_part(1) == sr.var("a") * sr.schur((1,))
    with pytest.raises(UsageError):
        schur_sum(sr, "nonsense", 1)


def test_gessel_l1_is_g0():
    sr = identity_ring(3, 6, 3)
    assert schur_sum(sr, "pair", 1) == sr.g_entry(0)


def test_sp_l1_hankel():
    sr = ring_xy(k=2, D=6)
    assert schur_sum(sr, "Sp", 1) == sr.i_entry(0) - sr.i_entry(2)
    assert schur_sum(sr, "Sp", 2) == sr.hankel_det(2, 0, 2, -1)


def test_alpha_one_is_all_lambda():
    sr = identity_ring(4, 6, 3)
    for l in range(4):
        assert schur_sum(sr, "O-alpha", l, alpha=1) == schur_sum(sr, "all", l)


@pytest.mark.parametrize("tag", TAGS)
def test_registry_tags(tag):
    for l in range(3):
        rep = verify_identity(tag, l, k=3, D=6)
        assert rep["status"] == "pass", rep


def test_verify_identity_usage():
    with pytest.raises(UsageError):
        verify_identity("nonsense", 1)
    with pytest.raises(UsageError):
        verify_identity("fixinv", 1, D=0)


def test_pfaffian_route_even_l():
    sr = identity_ring(4, 4, 4)
    for l in (0, 2):
        r = pfaffian_route_O(sr, l)
        assert r["direct_ok"] and r["reduced_ok"]
        assert r["sum"].constant_term() == 1
    assert pfaffian_route_O(sr, 2)["direct"].constant_term() == 1
    r0 = pfaffian_route_O(sr, 2, alpha=0)
    assert r0["reduced_ok"]
    assert r0["sum"] == schur_sum(sr, "O-alpha", 2, alpha=0)
    with pytest.raises(UsageError):
        pfaffian_route_O(sr, 1)


def test_pfaffian_route_l4():
    sr = identity_ring(4, 6, 3)
    r = pfaffian_route_O(sr, 4)
    assert r["direct_ok"] and r["reduced_ok"]


@pytest.mark.parametrize("group", ["U", "O", "Sp"])
def test_super_szego(group):
    for l in range(3):
        r = szego_super_check(group, l, k=2, m=1)
        assert r["agree"] and r["monotone"]


def test_fraction_coefficients_are_exact():
    sr = ring_xy(k=1, D=2)
    assert (sr.h(1) * F(1, 3)).coeff((1,)) == F(1, 3)
