from fractions import Fraction

import pytest

from sympq.exact_algebra import LaurentPoly
from sympq.exceptions import DomainError, ParseError
from sympq.gamma_ring import usymp_P_skew, usymp_Q_skew
from sympq.laurent_models import SpecializationContext, specialize
from sympq.partitions import SkewShiftedShape, StrictPartition, enumerate_strict, staircase
from sympq.tableaux import (
    AlphabetEntry,
    Tableau,
    alphabet,
    chain_factorization_sum,
    enumerate_tableaux,
    fac_weight,
    flip,
    one_variable_determinant,
    render_tableau,
    tableau_sum,
    tableau_to_json,
    weight,
)


def sp(*parts: int) -> StrictPartition:
    return StrictPartition(parts)


def build(outer: StrictPartition, inner: StrictPartition, rows: dict[int, list[str]]) -> Tableau:
    """按行给出字母, 每行从该行第一个非内形格子开始"""
    shape = SkewShiftedShape(outer, inner)
    entries = {}
    for i, letters in rows.items():
        start = i + inner.part(i)
        for offset, text in enumerate(letters):
            entries[i, start + offset] = AlphabetEntry.parse(text)
    return Tableau(shape, entries)


def test_alphabet_order():
    assert [str(e) for e in alphabet(2)] == ["1'", "1", "~1'", "~1", "2'", "2", "~2'", "~2"]
    assert sorted(alphabet(3), reverse=True)[0] == AlphabetEntry(3, barred=True)
    assert AlphabetEntry.parse("~3'") == AlphabetEntry(3, barred=True, primed=True)
    assert AlphabetEntry.parse("~3'").sign == -1


@pytest.mark.parametrize("text", ["0", "x", "3''", "'3"])
def test_alphabet_parse_errors(text):
    with pytest.raises(ParseError):
        AlphabetEntry.parse(text)


def example_tableau() -> Tableau:
    return build(
        sp(8, 6, 5, 2),
        sp(),
        {
            1: ["1", "1", "2'", "2", "3", "~3", "~3", "5"],
            2: ["2'", "~2'", "3'", "~3'", "4'", "4"],
            3: ["3'", "3", "~3'", "4'", "~4"],
            4: ["~5'", "~5"],
        },
    )


def test_example_tableau_weight():
    t = example_tableau()
    assert t.is_valid(5)
    assert t.exponents(5) == (2, 2, 0, 2, -1)
    assert weight(t, 5) == LaurentPoly.monomial((2, 2, 0, 2, -1))
    # 对角线上有带撇字母, 不属于 PTab
    assert not t.is_valid(5, primed_diagonal=False)
    assert not t.is_valid(4)


@pytest.mark.parametrize(
    ("rows", "valid"),
    [
        ({1: ["1", "1"], 2: ["2"]}, True),
        ({1: ["1'", "1'"], 2: ["2"]}, False),
        ({1: ["1", "2"], 2: ["2"]}, False),
        ({1: ["1", "1"], 2: ["1"]}, False),
        ({1: ["2", "~2"], 2: ["~2"]}, False),
    ],
)
def test_filling_rules(rows, valid):
    assert build(sp(2, 1), sp(), rows).is_valid(2) is valid


def test_single_box():
    shape = SkewShiftedShape(sp(1), sp())
    x = LaurentPoly.variable(1, 0)
    x_inv = LaurentPoly.variable(1, 0, -1)
    assert len(list(enumerate_tableaux(shape, 1))) == 4
    assert len(list(enumerate_tableaux(shape, 1, primed_diagonal=False))) == 2
    assert tableau_sum(shape, 1) == 2 * x + 2 * x_inv
    assert tableau_sum(shape, 1, primed_diagonal=False) == x + x_inv


# 表和等于 Q^C_{λ/μ}, 对角线不带撇时等于 P^C_{λ/μ}
@pytest.mark.parametrize("n", [1, 2])
def test_tableau_sum_matches_usymp(n):
    ctx = SpecializationContext(n)
    for lam in enumerate_strict(4):
        for mu in enumerate_strict(lam.weight):
            if not lam.contains(mu):
                continue
            shape = SkewShiftedShape(lam, mu)
            assert tableau_sum(shape, n) == specialize(usymp_Q_skew(lam, mu), ctx)
            assert tableau_sum(shape, n, primed_diagonal=False) == specialize(usymp_P_skew(lam, mu), ctx)


def test_enumerated_tableaux_are_valid():
    shape = SkewShiftedShape(sp(3, 1), sp(1))
    tableaux = list(enumerate_tableaux(shape, 2))
    assert tableaux
    assert all(t.is_valid(2) for t in tableaux)
    assert sum((weight(t, 2) for t in tableaux), LaurentPoly.zero(2)) == tableau_sum(shape, 2)


@pytest.mark.parametrize(("lam", "mu"), [(sp(3, 1), sp()), (sp(3, 1), sp(1)), (sp(4, 2), sp(2)), (sp(3, 2, 1), sp(2))])
def test_chain_factorization(lam, mu):
    shape = SkewShiftedShape(lam, mu)
    assert chain_factorization_sum(shape, 2) == tableau_sum(shape, 2)


def test_one_variable_determinant():
    for lam, mu in [(sp(3, 1), sp(1)), (sp(4, 2), sp(3)), (sp(3), sp())]:
        shape = SkewShiftedShape(lam, mu)
        assert one_variable_determinant(shape) == tableau_sum(shape, 1)
    # 长度差至少为 2 时单变量表和为 0
    assert not tableau_sum(SkewShiftedShape(sp(3, 1), sp()), 1)


def test_flip_example():
    t = build(
        staircase(5),
        sp(5, 2),
        {2: ["2'", "2"], 3: ["1", "2'", "~3'"], 4: ["~4", "~4"], 5: ["5'"]},
    )
    assert t.is_valid(6)
    expected = build(
        sp(4, 3, 1),
        sp(),
        {1: ["~2", "3'", "4", "~5'"], 2: ["3'", "~5", "~5"], 3: ["~6'"]},
    )
    image = flip(t, 5, 6)
    assert image == expected
    assert image.is_valid(6)
    assert flip(image, 5, 6) == t
    assert image.exponents(6) == tuple(-e for e in reversed(t.exponents(6)))


# 翻转给出形状 μ*/λ* 与 λ/μ 上的表之间的双射
def test_flip_is_bijection():
    shape = SkewShiftedShape(sp(3, 1), sp(1))
    dual = SkewShiftedShape(sp(3, 2), sp(2))
    images = [flip(t, 3, 2) for t in enumerate_tableaux(shape, 2)]
    assert all(image.shape == dual and image.is_valid(2) for image in images)
    assert len(images) == len(list(enumerate_tableaux(dual, 2)))
    assert tableau_sum(dual, 2) == tableau_sum(shape, 2)


def test_flip_outside_staircase():
    t = build(sp(4), sp(), {1: ["1", "1", "1", "1"]})
    with pytest.raises(DomainError):
        flip(t, 3, 1)


def test_fac_weight():
    t = build(sp(2, 1), sp(), {1: ["1'", "~1"], 2: ["2"]})
    x1 = LaurentPoly.variable(2, 0)
    x1_inv = LaurentPoly.variable(2, 0, -1)
    x2 = LaurentPoly.variable(2, 1)
    a = (Fraction(0), Fraction(3))
    assert fac_weight(t, 2, a) == x1 * (x1_inv + 3) * x2
    assert fac_weight(t, 2, (0, 0)) == weight(t, 2)
    with pytest.raises(DomainError):
        fac_weight(t, 2, (0,))


def test_render_and_json():
    t = build(sp(2, 1), sp(), {1: ["1", "1"], 2: ["2"]})
    assert render_tableau(t) == "1 1\n  2"
    skew = build(sp(3, 1), sp(1), {1: ["1'", "1"], 2: ["~2"]})
    assert render_tableau(skew) == " . 1'  1\n   ~2"
    assert tableau_to_json(t)[0] == {"row": 1, "col": 1, "level": 1, "primed": False, "barred": False}
    assert [(c["row"], c["col"]) for c in tableau_to_json(t)] == [(1, 1), (1, 2), (2, 2)]
