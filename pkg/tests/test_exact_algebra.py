from fractions import Fraction

import pytest

from sympq.exact_algebra import (
    GradedPolynomial,
    LaurentPoly,
    RingMatrix,
    TruncSeries,
    determinant,
    exact_divide,
    permutation_determinant,
    pfaffian,
    rational_determinant,
    rational_inverse,
)
from sympq.exceptions import ConsistencyError, DivisibilityError, PoleError, StructuralError
from sympq.utils.common import random_rational, seeded_rng

x = LaurentPoly.variable(1, 0)
x_inv = LaurentPoly.variable(1, 0, -1)


def _random_poly(rng, nvars: int, terms: int = 4) -> LaurentPoly:
    return LaurentPoly(
        nvars,
        {tuple(rng.randint(-2, 2) for _ in range(nvars)): random_rational(rng, 9) for _ in range(terms)},
    )


def _random_skew(rng, size: int) -> RingMatrix:
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            rows[i][j] = random_rational(rng, 9, nonzero=False)
            rows[j][i] = -rows[i][j]
    return RingMatrix(tuple(tuple(r) for r in rows), Fraction(1))


def test_laurent_arithmetic():
    assert str(x * 2 + x_inv * 2) == "2*x1 + 2*x1^-1"
    assert (x + x_inv) ** 2 == x**2 + 2 + x_inv**2
    assert x * x_inv == LaurentPoly.one(1)
    assert not (x - x)
    assert str(LaurentPoly.zero(2)) == "0"


def test_laurent_requires_same_nvars():
    with pytest.raises(StructuralError):
        LaurentPoly.variable(1, 0) + LaurentPoly.variable(2, 0)
    with pytest.raises(StructuralError):
        LaurentPoly(2, {(1,): 1})


def test_laurent_evaluate():
    p = x**2 - 3 * x_inv
    assert p.evaluate([Fraction(1, 2)]) == Fraction(1, 4) - 6
    with pytest.raises(PoleError):
        p.evaluate([0])


# 乘法与求值相容
def test_multiplication_agrees_with_evaluation():
    rng = seeded_rng(0, "laurent-eval")
    for _ in range(10):
        p, q = _random_poly(rng, 3), _random_poly(rng, 3)
        pt = [random_rational(rng, 7) for _ in range(3)]
        assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)


def test_weyl_action():
    p = LaurentPoly(2, {(2, -1): 1, (0, 1): 3})
    assert p.invert(1) == LaurentPoly(2, {(2, 1): 1, (0, -1): 3})
    assert p.permute([1, 0]) == LaurentPoly(2, {(-1, 2): 1, (1, 0): 3})
    assert x.embed(3, 1) == LaurentPoly.variable(3, 1)


def test_exact_divide():
    assert exact_divide(x**2 - x_inv**2, x - x_inv, 0) == x + x_inv
    p = _random_poly(seeded_rng(1, "div"), 2)
    assert exact_divide(p, LaurentPoly.one(2), 0) == p


def test_exact_divide_product_roundtrip():
    rng = seeded_rng(2, "div")
    for _ in range(5):
        p, q = _random_poly(rng, 2), _random_poly(rng, 2, 3)
        if q:
            assert exact_divide(p * q, q, 0) == p


def test_exact_divide_remainder():
    with pytest.raises(DivisibilityError):
        exact_divide(x**2 + 1, x - 1, 0)
    with pytest.raises(DivisibilityError):
        exact_divide(x, LaurentPoly.zero(1), 0)


def test_trunc_series():
    geo = TruncSeries.geometric(Fraction(2), 4)
    assert geo.coefficients == (1, 2, 4, 8, 16)
    one_minus = TruncSeries.constant(Fraction(1), 4) - TruncSeries.monomial(1, 4, Fraction(2))
    assert geo * one_minus == TruncSeries.constant(Fraction(1), 4)
    assert geo.coeff(-1) == 0
    with pytest.raises(StructuralError):
        geo.coeff(5)


# 截断级数的环公理
def test_trunc_series_ring_laws():
    rng = seeded_rng(3, "series")
    for _ in range(5):
        a, b, c = (TruncSeries(tuple(random_rational(rng, 5, nonzero=False) for _ in range(13))) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_pfaffian_small():
    assert pfaffian(RingMatrix(((0, 3), (-3, 0)))) == 3
    a = ((0, 1, 2, 3), (-1, 0, 4, 5), (-2, -4, 0, 6), (-3, -5, -6, 0))
    # a12 a34 - a13 a24 + a14 a23
    assert pfaffian(RingMatrix(a)) == 1 * 6 - 2 * 5 + 3 * 4
    assert pfaffian(RingMatrix(())) == 1


def test_pfaffian_over_laurent_ring():
    one = LaurentPoly.one(1)
    m = RingMatrix(((one * 0, x), (-x, one * 0)), one)
    assert pfaffian(m) == x


@pytest.mark.parametrize(
    "entries",
    [
        ((0, 1, 2), (-1, 0, 3), (-2, -3, 0)),
        ((0, 1), (1, 0)),
        ((1, 0), (0, 0)),
    ],
)
def test_pfaffian_structural_errors(entries):
    with pytest.raises(StructuralError):
        pfaffian(RingMatrix(entries))


# 分块矩阵 (Z, W; -W^T, O) 的 Pfaffian 为 (-1)^{n(n-1)/2} det(W)
def test_pfaffian_block():
    z = RingMatrix(((0, 1, 2), (-1, 0, 3), (-2, -3, 0)))
    w = RingMatrix(((1, 2, 0), (0, 1, 3), (4, 0, 1)))
    assert determinant(w) == 25
    assert pfaffian(RingMatrix.skew_block(z, w)) == -25


@pytest.mark.parametrize("size", [2, 4, 6, 8])
def test_pfaffian_square_is_determinant(size):
    rng = seeded_rng(4, f"pf{size}")
    for _ in range(3):
        a = _random_skew(rng, size)
        assert pfaffian(a) ** 2 == determinant(a)


@pytest.mark.parametrize("size", [4, 6])
def test_pfaffian_congruence(size):
    rng = seeded_rng(5, f"congruence{size}")
    a = _random_skew(rng, size)
    b = RingMatrix(tuple(tuple(random_rational(rng, 9, nonzero=False) for _ in range(size)) for _ in range(size)), Fraction(1))
    assert pfaffian(b.transpose() @ a @ b) == determinant(b) * pfaffian(a)


def test_determinant():
    assert determinant(RingMatrix(((1, 0, 0), (0, 1, 0), (0, 0, 1)))) == 1
    assert determinant(RingMatrix(((1, 2), (3, 4)))) == -2
    with pytest.raises(StructuralError):
        determinant(RingMatrix(((1, 2, 3), (4, 5, 6))))


def test_vandermonde_matches_permutation_oracle():
    values = [Fraction(1, 2), Fraction(-3), Fraction(5, 7)]
    m = RingMatrix(tuple(tuple(v**j for j in range(3)) for v in values), Fraction(1))
    expected = (values[1] - values[0]) * (values[2] - values[0]) * (values[2] - values[1])
    assert determinant(m) == expected == permutation_determinant(m)


def test_determinant_over_laurent_ring():
    one = LaurentPoly.one(1)
    m = RingMatrix(((x, one), (one, x_inv)), one)
    assert determinant(m) == permutation_determinant(m) == LaurentPoly.zero(1)


def test_rational_inverse():
    rows = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert rational_inverse(rows) == [[1, -1], [-1, 2]]
    assert rational_determinant(rows) == 1
    with pytest.raises(ConsistencyError):
        rational_inverse([[1, 2], [2, 4]])


def test_graded_polynomial():
    g1, g2 = GradedPolynomial.generator(1), GradedPolynomial.generator(2)
    p = g2 * g1 - 2 * GradedPolynomial.generator(3)
    assert str(p) == "g[2,1] - 2*g[3]"
    assert p.degrees() == {3}
    assert p.coefficient((1, 2)) == 1
    assert str(GradedPolynomial.one()) == "1"
    assert GradedPolynomial.generator(0) == 1
    assert not GradedPolynomial.generator(-1)
