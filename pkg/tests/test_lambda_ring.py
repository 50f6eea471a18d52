from fractions import Fraction

import pytest

from sympq.exact_algebra import TruncSeries
from sympq.gamma_ring import q, schur_P
from sympq.lambda_ring import (
    LambdaElement,
    bialternant_schur,
    elementary_in_h,
    evaluate_lambda,
    expand_in_schur,
    expand_in_usymp_schur,
    expansion_text,
    g_tilde_coefficients,
    gamma_to_lambda,
    h,
    hook_coefficient,
    q_in_h,
    schur_s,
    usymp_schur,
)
from sympq.partitions import Partition, StrictPartition, add, enumerate_partitions, enumerate_strict, staircase
from sympq.utils.common import random_rational, seeded_rng


def test_elementary_in_h():
    assert elementary_in_h(0) == 1
    assert elementary_in_h(1) == h(1)
    assert elementary_in_h(2) == h(1) ** 2 - h(2)
    assert not elementary_in_h(-1)


def test_q_in_h():
    assert q_in_h(0) == 1
    assert q_in_h(1) == 2 * h(1)
    assert q_in_h(2) == 2 * h(1) ** 2


# q_r 的像与有限变量生成函数 prod (1+xz)/(1-xz) 一致
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_q_in_h_matches_generating_function(r):
    point = [Fraction(2), Fraction(-1, 3), Fraction(5, 2)]
    series = TruncSeries.constant(Fraction(1), r)
    for x in point:
        series = series * TruncSeries.monomial(1, r, x) + series
        series = series * TruncSeries.geometric(x, r)
    assert evaluate_lambda(q_in_h(r), point) == series.coeff(r)
    assert evaluate_lambda(h(2), [Fraction(2), Fraction(3)]) == 4 + 6 + 9


def test_gamma_to_lambda_is_ring_map():
    for r in range(1, 4):
        for s in range(1, 4):
            assert gamma_to_lambda(q(r) * q(s)) == q_in_h(r) * q_in_h(s)
    # Γ 中的关系在 Λ 中保持
    assert gamma_to_lambda(q(2)) == gamma_to_lambda(q(1) * q(1) * Fraction(1, 2))


def test_usymp_schur():
    assert usymp_schur(Partition()) == 1
    assert usymp_schur(Partition((1,))) == h(1)
    assert schur_s(Partition((1, 1))) == h(1) ** 2 - h(2)


@pytest.mark.parametrize("mu", [Partition((2, 1)), Partition((2, 2)), Partition((3, 1, 1)), Partition((4, 2))])
def test_usymp_schur_lower_terms(mu):
    diff = usymp_schur(mu) - schur_s(mu)
    assert all(d < mu.weight and (mu.weight - d) % 2 == 0 for d in diff.degrees())


# Jacobi-Trudi 与双交错式在随机有理点处一致
def test_jacobi_trudi_matches_bialternant():
    rng = seeded_rng(0, "jacobi-trudi")
    for mu in enumerate_partitions(6, 4):
        point = [random_rational(rng, 9) for _ in range(4)]
        while len(set(point)) < 4:
            point = [random_rational(rng, 9) for _ in range(4)]
        assert evaluate_lambda(schur_s(mu), point) == bialternant_schur(mu, point)


def test_expand_in_schur():
    assert expand_in_schur(h(1) ** 2) == {Partition((2,)): 1, Partition((1, 1)): 1}
    assert expand_in_usymp_schur(usymp_schur(Partition((2, 1)))) == {Partition((2, 1)): 1}
    assert expand_in_usymp_schur(LambdaElement.zero()) == {}


@pytest.mark.parametrize("r", range(1, 7))
def test_hook_formula(r):
    coeffs = g_tilde_coefficients(StrictPartition((r,)))
    for d in range(r + 1):
        for mu in enumerate_partitions(d):
            if mu.weight == d:
                assert coeffs.get(mu, 0) == hook_coefficient(r, mu)
    assert all(mu.weight <= r for mu in coeffs)


def test_hook_coefficient_values():
    assert hook_coefficient(4, Partition((2, 1, 1))) == 1
    assert hook_coefficient(4, Partition((2,))) == 2
    assert hook_coefficient(4, Partition((1,))) == 0
    assert hook_coefficient(4, Partition()) == 1
    assert hook_coefficient(3, Partition()) == 0
    assert hook_coefficient(4, Partition((2, 2))) == 0


# P^C_{δ_r+δ_s} = s^C_{δ_r} s^C_{δ_s}
@pytest.mark.parametrize(("r", "s"), [(1, 1), (2, 1), (2, 2)])
def test_staircase_sum_expansion(r, s):
    product = usymp_schur(staircase(r)) * usymp_schur(staircase(s))
    assert g_tilde_coefficients(add(staircase(r), staircase(s))) == expand_in_usymp_schur(product)


# g̃ 的最高次部分即经典的 Schur P 到 Schur s 的系数
def test_g_tilde_top_degree():
    for lam in enumerate_strict(5):
        classical = expand_in_schur(gamma_to_lambda(schur_P(lam)))
        top = {mu: c for mu, c in g_tilde_coefficients(lam).items() if mu.weight == lam.weight}
        assert top == classical


# 猜想: g̃_{λ,μ} 为非负整数
def test_g_tilde_nonnegative():
    for lam in enumerate_strict(6):
        assert all(c >= 0 and c.denominator == 1 for c in g_tilde_coefficients(lam).values())


def test_expansion_text():
    coeffs = {Partition((1,)): Fraction(2), Partition((2, 1)): Fraction(1), Partition(): Fraction(-1, 2)}
    assert expansion_text(coeffs, "sC") == "sC[2,1] + 2*sC[1] - 1/2"
    assert expansion_text({}, "sC") == "0"
