from fractions import Fraction

import pytest

from sympq.exact_algebra import LaurentPoly, TruncSeries
from sympq.exceptions import ConsistencyError, DomainError, NotInSpanError
from sympq.gamma_ring import structure_constants
from sympq.laurent_models import f_tilde
from sympq.partitions import StrictPartition, enumerate_strict, interlacing_below
from sympq.pieri_paths import (
    PieriCoefficient,
    b_series,
    b_series_from_products,
    b_series_recursive,
    check_b_series,
    class_count,
    count_families_through,
    enumerate_paths,
    enumerated_weight_sum,
    expand_in_f_tilde,
    path_degree,
    path_family_series,
    path_weight_sum,
    pieri_agreement,
    pieri_closed,
    pieri_expand,
    pieri_expansion,
    pieri_from_series,
    r1_support,
    u_series,
)


def sp(*parts: int) -> StrictPartition:
    return StrictPartition(parts)


MU = sp(4, 3, 1)


def test_pieri_closed_examples():
    assert pieri_closed(MU, MU, 2) == 3
    assert pieri_closed(sp(5, 3, 2), MU, 2) == 2
    # 长度条件不满足
    assert pieri_closed(sp(6, 4), MU, 2) == 0
    with pytest.raises(DomainError):
        pieri_closed(MU, MU, 0)


def test_pieri_expand_example():
    # (4,3,2,1) ≻ κ = (4,3,1), a = 1, 系数 2^{0+1-0-1} = 1
    expected = {
        sp(6, 3, 1): 1,
        sp(5, 4, 1): 1,
        sp(5, 3, 2): 2,
        sp(4, 3, 2, 1): 1,
        sp(5, 2, 1): 2,
        sp(4, 3, 1): 3,
        sp(3, 2, 1): 1,
    }
    assert pieri_expand(MU, 2) == expected
    assert pieri_expansion(MU, 2) == structure_constants(MU, sp(2))
    assert pieri_expand(MU, 2) == structure_constants(MU, sp(2)).coeffs


def test_pieri_coefficient():
    coefficient = PieriCoefficient.compute(MU, MU, 2)
    assert coefficient.value == 3
    with pytest.raises(ConsistencyError):
        PieriCoefficient(MU, MU, 2, -1)
    with pytest.raises(ConsistencyError):
        PieriCoefficient(sp(6, 4), MU, 2, 1)


@pytest.mark.parametrize(
    ("mu", "support"),
    [
        (sp(), {sp(1)}),
        (sp(2, 1), {sp(3, 1)}),
        (sp(3, 1), {sp(4, 1), sp(3, 2), sp(2, 1)}),
    ],
)
def test_r1_support(mu, support):
    assert r1_support(mu) == support
    assert set(pieri_expand(mu, 1)) == support


# 四种算法给出相同的 Pieri 系数
@pytest.mark.parametrize(("mu", "r"), [(sp(), 2), (sp(1), 1), (sp(2, 1), 2), (sp(3, 1), 3), (MU, 2)])
def test_pieri_agreement(mu, r):
    assert pieri_agreement(mu, r)


def test_pieri_coefficients_nonnegative():
    for mu in enumerate_strict(5):
        for r in range(1, 4):
            product = structure_constants(mu, sp(r))
            assert all(c > 0 and c.denominator == 1 for c in product.coeffs.values())


def test_b_series_closed():
    assert b_series(1, 1, 4).series == TruncSeries((1, 0, 2, 0, 0))
    assert b_series(0, 0, 3).series == TruncSeries.constant(1, 3)
    assert b_series(3, 0, 4).series == TruncSeries.monomial(3, 4, 2)
    assert not any(b_series(0, 2, 4).series.coefficients)
    # 2 z (1+z^2)(1+z^2) 截断
    assert b_series(3, 2, 6).series == TruncSeries((0, 2, 0, 4, 0, 2, 0))
    with pytest.raises(DomainError):
        b_series(-1, 0, 3)


@pytest.mark.parametrize("s", range(5))
def test_b_series_three_ways(s):
    assert check_b_series(s, 8)
    assert b_series_recursive(2, s, 6) == b_series(2, s, 6).series
    assert b_series_from_products(1, s, 6) == b_series(1, s, 6).series


def test_expand_in_f_tilde():
    assert expand_in_f_tilde(f_tilde(2) * f_tilde(1)) == {3: 1, 1: 1}
    assert expand_in_f_tilde(LaurentPoly.constant(1, 5)) == {0: 5}
    with pytest.raises(NotInSpanError):
        expand_in_f_tilde(LaurentPoly.variable(1, 0))


def test_paths_one_to_one():
    paths = list(enumerate_paths(1, 1))
    assert sorted(path_degree(p) for p in paths) == [0, 2, 2]
    assert path_weight_sum(1, 1, 4) == TruncSeries((1, 0, 2, 0, 0))
    assert path_weight_sum(0, 1, 3) == TruncSeries.monomial(1, 3, 2)
    # w^0_s 与 b^0_s 不同: 从 A_s 到 C_0 总有一条路
    assert path_weight_sum(2, 0, 3) == TruncSeries.monomial(2, 3)
    assert not any(b_series(0, 2, 3).series.coefficients)


@pytest.mark.parametrize("s", range(4))
@pytest.mark.parametrize("r", range(4))
def test_path_weight_sum_matches_enumeration(s, r):
    assert path_weight_sum(s, r, 8) == enumerated_weight_sum(s, r, 8)
    if s > 0 and r > 0:
        assert path_weight_sum(s, r, 8) == b_series(r, s, 8).series


def test_u_series():
    u = u_series(MU, MU, 4)
    assert u.coeff(0) == 1
    assert u.coeff(2) == 6
    assert path_family_series(MU, MU, 4) == u
    assert pieri_from_series(MU, MU, 2, "paths") == 3
    assert pieri_from_series(sp(5, 3, 2), MU, 2) == 2
    assert not any(u_series(sp(6, 4), MU, 4).coefficients)


def test_class_count():
    kappa = sp(4, 2, 1)
    assert class_count(MU, MU, kappa) == 4
    assert count_families_through(MU, MU, kappa) == 4
    for kappa in interlacing_below(sp(3, 1)):
        assert count_families_through(sp(3, 1), sp(3, 1), kappa) == class_count(sp(3, 1), sp(3, 1), kappa)


def test_pieri_from_series_is_rational():
    assert isinstance(pieri_from_series(sp(2), sp(1), 1), Fraction)
