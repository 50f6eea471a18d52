from fractions import Fraction

import pytest

from sympq.exceptions import DomainError, ParseError
from sympq.utils.cache import cache_info, clear_caches, memoize
from sympq.utils.common import (
    dumps,
    format_coefficient,
    format_rational,
    join_terms,
    parallel_map,
    parse_rational,
    parse_rationals,
    random_rational,
    rational_json,
    seeded_rng,
)
from sympq.utils.config import DEFAULT_LIMITS, SEED_ENV, check_limit, default_seed


@pytest.mark.parametrize(
    ("text", "value"),
    [("3", Fraction(3)), ("-1/2", Fraction(-1, 2)), (" 4 / 6 ", Fraction(2, 3)), ("+0", Fraction(0))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "a", "1.5", "1/-2"])
def test_parse_rational_errors(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_parse_rationals():
    assert parse_rationals("0,1/2,3") == (0, Fraction(1, 2), 3)
    assert parse_rationals(" ") == ()


def test_rendering():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert rational_json(Fraction(-3, 4)) == {"num": "-3", "den": "4"}
    assert format_coefficient(Fraction(1), "q[1]") == "q[1]"
    assert format_coefficient(Fraction(-1), "q[1]") == "-q[1]"
    assert format_coefficient(Fraction(2), "") == "2"
    assert join_terms(["a", "-2*b", "c"]) == "a - 2*b + c"
    assert join_terms([]) == "0"


# 相同输入的 JSON 输出逐字节一致
def test_dumps_is_deterministic():
    assert dumps({"b": 1, "a": [1, 2]}) == dumps({"a": [1, 2], "b": 1})
    assert dumps({"b": 1, "a": 2}).index('"a"') < dumps({"b": 1, "a": 2}).index('"b"')


def test_seeded_rng():
    a = [random_rational(seeded_rng(7, "k")) for _ in range(3)]
    b = [random_rational(seeded_rng(7, "k")) for _ in range(3)]
    assert a == b
    assert seeded_rng(7, "k").random() != seeded_rng(7, "other").random()
    assert all(random_rational(seeded_rng(1, str(i)), 3) for i in range(20))


def _square(v: int) -> int:
    return v * v


@pytest.mark.parametrize("jobs", [1, 2])
def test_parallel_map_keeps_order(jobs):
    assert parallel_map(_square, range(6), jobs) == [0, 1, 4, 9, 16, 25]


def test_default_seed(monkeypatch):
    monkeypatch.delenv(SEED_ENV, raising=False)
    assert default_seed() == 0
    monkeypatch.setenv(SEED_ENV, "42")
    assert default_seed() == 42
    monkeypatch.setenv(SEED_ENV, "abc")
    with pytest.raises(ParseError):
        default_seed()


def test_check_limit():
    assert check_limit("n", 3, DEFAULT_LIMITS["max_n"], 1) == 3
    with pytest.raises(DomainError):
        check_limit("n", 0, DEFAULT_LIMITS["max_n"], 1)
    with pytest.raises(DomainError):
        check_limit("max-weight", DEFAULT_LIMITS["max_weight"] + 1, DEFAULT_LIMITS["max_weight"])


def test_memoize():
    calls = []

    @memoize
    def double(v: int) -> int:
        calls.append(v)
        return 2 * v

    assert double(3) == double(3) == 6
    assert calls == [3]
    assert any(key.endswith("double") for key in cache_info())
    clear_caches()
    assert double(3) == 6
    assert calls == [3, 3]
