from fractions import Fraction

import pytest

from sympq.exact_algebra import LaurentPoly
from sympq.exceptions import DomainError, ParseError
from sympq.factorial import (
    FactorialParams,
    R_coeff,
    check_fg_by_g,
    check_q_rg,
    check_rel_e,
    d_coeff,
    elementary,
    fac_nimmo_eval,
    fac_separation_check,
    fac_tableau_sum,
    fac_weyl_eval,
    factorial_monomial,
    g_tilde_fac,
    g_tilde_fac_from_g,
    ufac_Q,
    ufac_Q_pair,
    ufac_Q_pfaffian,
    ufac_Q_skew,
)
from sympq.gamma_ring import GammaElement, usymp_Q, usymp_Q_skew
from sympq.laurent_models import SpecializationContext, g_tilde, random_point, specialize
from sympq.partitions import SkewShiftedShape, StrictPartition, enumerate_strict
from sympq.tableaux import tableau_sum
from sympq.utils.common import seeded_rng


def sp(*parts: int) -> StrictPartition:
    return StrictPartition(parts)


def params(key: str, length: int = 6) -> FactorialParams:
    return FactorialParams.random(seeded_rng(0, key), length)


def test_params():
    a = FactorialParams.parse("0,1/2,3")
    assert a.values == (0, Fraction(1, 2), 3)
    assert str(a) == "0,1/2,3"
    assert a.prefix(2).values == (0, Fraction(1, 2))
    assert FactorialParams.parse("0,1,2,3").shifted(1, 4).values == (0, 2, 3)
    assert FactorialParams.zeros(3).is_zero
    assert not a.is_zero
    with pytest.raises(DomainError):
        a.require(4)
    with pytest.raises(ParseError):
        FactorialParams.parse("0,x")


def test_random_params():
    a = params("random")
    assert len(a) == 6
    assert a[0] == 0
    assert a == params("random")


def test_elementary():
    values = [Fraction(1), Fraction(2), Fraction(3)]
    assert elementary(0, values) == 1
    assert elementary(2, values) == 11
    assert elementary(3, values) == 6
    assert elementary(4, values) == 0
    assert elementary(-1, values) == 0


def test_factorial_monomial():
    a = FactorialParams.parse("0,1")
    x = LaurentPoly.variable(1, 0)
    assert factorial_monomial(x, a, 2) == x * x + x
    assert factorial_monomial(Fraction(3), a, 2) == 12
    assert factorial_monomial(x, a, 0) == 1
    with pytest.raises(DomainError):
        factorial_monomial(x, a, 3)


def test_g_tilde_fac():
    zeros = FactorialParams.zeros(5)
    for d in range(6):
        assert g_tilde_fac(d, zeros) == g_tilde(d)
    a = FactorialParams.parse("0,1")
    assert g_tilde_fac(2, a) == g_tilde(2) + g_tilde(1)
    assert g_tilde_fac(1, a) == g_tilde(1)


@pytest.mark.parametrize("d", range(6))
def test_g_tilde_fac_from_g(d):
    a = params(f"fg/{d}")
    assert g_tilde_fac_from_g(d, a) == g_tilde_fac(d, a)
    assert check_fg_by_g(d, a)


def test_d_coeff():
    a = FactorialParams.parse("0,1")
    assert d_coeff(sp(2), sp(1), a) == 1
    assert d_coeff(sp(2), sp(2), a) == 1
    assert d_coeff(sp(1), sp(2), a) == 0
    with pytest.raises(DomainError):
        d_coeff(sp(2, 1), sp(1), a)
    b = params("d")
    assert d_coeff(sp(4, 2, 1), sp(4, 2, 1), b) == 1
    assert d_coeff(sp(3), sp(1), b) == elementary(2, b.values[:3])


# a = 0 时退化为非阶乘的万有辛 Q 函数
@pytest.mark.parametrize("lam", [sp(2), sp(3, 1), sp(3, 2, 1), sp(4, 2)])
def test_ufac_reduces_at_zero(lam):
    zeros = FactorialParams.zeros(lam.part(1))
    assert ufac_Q(lam, zeros) == usymp_Q(lam)
    for mu in enumerate_strict(lam.weight):
        if lam.contains(mu):
            assert ufac_Q_skew(lam, mu, zeros) == usymp_Q_skew(lam, mu)


def test_ufac_leading_term():
    a = params("leading")
    lam = sp(3, 1)
    diff = ufac_Q(lam, a) - usymp_Q(lam)
    assert all(d < lam.weight for d in diff.degrees())


@pytest.mark.parametrize("lam", [sp(1), sp(2, 1), sp(3, 1), sp(3, 2, 1), sp(4, 3)])
def test_ufac_pfaffian(lam):
    a = params(f"pf/{lam}")
    assert ufac_Q_pfaffian(lam, a) == ufac_Q(lam, a)


def test_ufac_pair_conventions():
    a = params("pair")
    assert ufac_Q_pair(3, 1, a) == -ufac_Q_pair(1, 3, a)
    assert ufac_Q_pair(2, 2, a) == GammaElement.zero()
    assert ufac_Q_pair(3, 0, a) == ufac_Q(sp(3), a)


def test_R_coeff():
    a = params("R")
    assert R_coeff(3, 3, a) == GammaElement.one()
    assert R_coeff(3, 4, a) == GammaElement.zero()
    assert R_coeff(3, 0, a) == ufac_Q(sp(3), a)
    zeros = FactorialParams.zeros(4)
    assert R_coeff(4, 1, zeros) == usymp_Q(sp(3))


def test_ufac_skew():
    a = params("skew")
    assert ufac_Q_skew(sp(3, 1), sp(), a) == ufac_Q(sp(3, 1), a)
    assert ufac_Q_skew(sp(2), sp(3), a) == GammaElement.zero()


@pytest.mark.parametrize("n", [1, 2])
def test_fac_tableau_sum(n):
    a = params(f"tab/{n}", 4)
    ctx = SpecializationContext(n)
    for lam, mu in [(sp(1), sp()), (sp(2), sp()), (sp(2, 1), sp()), (sp(3, 1), sp(1)), (sp(3, 1), sp(2))]:
        shape = SkewShiftedShape(lam, mu)
        assert fac_tableau_sum(shape, n, a) == specialize(ufac_Q_skew(lam, mu, a), ctx)
    shape = SkewShiftedShape(sp(3, 1), sp())
    assert fac_tableau_sum(shape, n, FactorialParams.zeros(3)) == tableau_sum(shape, n)


def test_fac_tableau_sum_needs_zero_a0():
    shape = SkewShiftedShape(sp(1), sp())
    with pytest.raises(DomainError):
        fac_tableau_sum(shape, 1, FactorialParams.parse("1"))
    with pytest.raises(DomainError):
        fac_tableau_sum(shape, 1, FactorialParams())


@pytest.mark.parametrize("r", range(1, 6))
def test_rel_e(r):
    a = params(f"rel-e/{r}")
    for i in range(r + 1):
        for j in range(r + 1 - i):
            assert check_rel_e(a, r, i, j)


@pytest.mark.parametrize(("r", "n"), [(1, 1), (2, 1), (3, 1), (2, 2)])
def test_one_row_split(r, n):
    assert check_q_rg(r, n, params(f"q-rg/{r}/{n}"))


@pytest.mark.parametrize("lam", [sp(1), sp(2), sp(2, 1), sp(3, 1)])
def test_fac_separation(lam):
    assert fac_separation_check(lam, params(f"sep/{lam}"))


@pytest.mark.parametrize(("lam", "n"), [(sp(1), 1), (sp(3), 1), (sp(2, 1), 2), (sp(3, 1), 2), (sp(3, 2), 3)])
def test_fac_nimmo_and_weyl(lam, n):
    a = params(f"forms/{lam}")
    pt = random_point(n, seeded_rng(0, f"forms-pt/{lam}"))
    expected = specialize(ufac_Q(lam, a), SpecializationContext(n)).evaluate(pt.values)
    assert fac_nimmo_eval(lam, a, pt.values) == expected
    assert fac_weyl_eval(lam, a, pt.values) == expected
