import random
from fractions import Fraction as F

import pytest

from incseq.exact import TruncatedSeries
from incseq.integrals import D_series, LaurentSeries, bessel_I, exp_tz, integral_det
from incseq.opuc import (
    DegeneracyError, alpha_formula_check, bessel_opuc, divide_one_minus_ab, halfline_build,
    halfline_relations_check, moments_of, opuc_build, opuc_identities, pval, tail_products,
    unitary_alpha_beta_check, verify_products, _alpha_ring,
)

ORDER = 10


def delta(j):
    return F(1) if j == 0 else F(0)


def test_trivial_weight():
    data = opuc_build(delta, 5)
    for j in range(6):
        assert data.pi[j] == [0] * j + [1]
        assert data.N[j] == 1
        if j:
            assert data.refl(j) == 0


def test_bessel_first_values():
    data = bessel_opuc(3, ORDER)
    assert data.N[0] == bessel_I(0, ORDER)
    r1 = data.refl(1)
    assert r1 == -bessel_I(1, ORDER) / bessel_I(0, ORDER)
    assert [r1[k] for k in range(5)] == [0, -1, 0, F(1, 2), 0]


def test_degenerate_weight():
    # c_j = 1 for all j: the weight is a point mass, degree 1 has norm 0
    with pytest.raises(DegeneracyError):
        opuc_build(lambda j: F(1), 2)


def test_bessel_identities():
    rep = opuc_identities(bessel_opuc(8, ORDER))
    assert all(rep.values()), rep


def test_random_weight_identities():
    rng = random.Random(2)
    g = LaurentSeries({j: F(rng.randint(-2, 2)) for j in (1, 2)})
    g = LaurentSeries({0: F(5), **g.c})
    data = opuc_build(moments_of(g), 4)
    rep = opuc_identities(data)
    assert all(rep.values()), rep


def test_norm_ratio():
    data = bessel_opuc(6, ORDER)
    for l in range(1, 7):
        assert data.N[l] == (1 - data.refl(l) ** 2) * data.N[l - 1]


def test_products_bessel():
    rep = verify_products(exp_tz(ORDER), 3)
    assert all(rep.values()), [k for k, v in rep.items() if not v]


def test_products_examples():
    data = bessel_opuc(4, ORDER)
    for l in range(4):
        prod = TruncatedSeries.const(1, ORDER)
        for j in range(l):
            prod = prod * data.N[j]
        assert prod == D_series("D", l, ORDER)
    assert data.N[2] / (1 - data.refl(2)) == D_series("D++", 1, ORDER)


def test_products_polynomial_weight():
    g = LaurentSeries({0: F(3), 1: F(1), 2: F(-1)})
    rep = verify_products(g, 2)
    assert all(rep.values()), [k for k, v in rep.items() if not v]


def test_tail_products_tend_to_one():
    for l in range(3):
        rep = tail_products(l, 6, ORDER)
        assert all(rep.values()), rep


def test_halfline_trivial_weight():
    # monic Chebyshev polynomials; the product over 0 <= j < 2l picks up 1 + pi_0(0) = 2
    ps, norms = halfline_build(delta, "--", 3)
    assert pval(ps[0], 1) == 1
    for l in range(1, 4):
        assert pval(ps[l], 1) == F(2, 2 ** l)


def test_halfline_bessel():
    rep = halfline_relations_check(lambda j: bessel_I(j, ORDER), 3)
    gated = {k: v for k, v in rep.items() if not k.endswith(":printed")}
    assert all(gated.values()), [k for k, v in gated.items() if not v]


def test_halfline_printed_products():
    # with N_0 = 1 the printed forms hold, except the N-- product which
    # carries the vanishing factor 1 - pi_0(0)^2
    rep = halfline_relations_check(delta, 3)
    assert [k for k, v in rep.items() if not v] == ["N-- product:printed"]
    bessel = halfline_relations_check(lambda j: bessel_I(j, ORDER), 2)
    assert not bessel["N+- product:printed"]


def test_alpha_formulas():
    rep = alpha_formula_check(2, 8)
    assert all(rep.values()), [k for k, v in rep.items() if not v]


def test_alpha_zero():
    ring = _alpha_ring(8, 3)
    g = exp_tz(8, ring)
    lin = LaurentSeries({0: ring.one(), 1: ring.var("a") * -1}) * g
    for m in range(1, 5):
        for grp in ("O+", "O-"):
            assert integral_det(grp, m, lin).subs({"a": 0}) == integral_det(grp, m, g)


def test_unitary_alpha_beta_bessel():
    for l in range(3):
        rep = unitary_alpha_beta_check(l, 8)
        assert all(rep.values()), rep


def test_unitary_alpha_beta_trivial_weight():
    ring = _alpha_ring(4, 2)
    g = LaurentSeries({0: ring.one()})
    rep = unitary_alpha_beta_check(1, 4, g, opuc_build(delta, 1))
    assert all(rep.values()), rep


def test_divide_one_minus_ab():
    ring = _alpha_ring(4, 4)
    a, b, t = ring.var("a"), ring.var("b"), ring.var("t")
    q0 = 1 + a * t + b * b
    q, rem = divide_one_minus_ab((1 - a * b) * q0)
    assert q == q0 and not rem
    q, rem = divide_one_minus_ab(a + ring.one())
    assert rem

