"""实用函数"""

import logging
import random
import re
from collections.abc import Callable, Iterable
from fractions import Fraction
from typing import Any, TypeVar

import orjson as json
from joblib import Parallel, delayed

from ..exceptions import ParseError

logger = logging.getLogger("sympq.utils")

T = TypeVar("T")
R = TypeVar("R")

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """解析有理数文本

    Args:
        text: 形如 `3`, `-1/2` 的文本

    Returns:
        约分后的有理数

    Raises:
        ParseError: 文本格式错误或分母为零
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ParseError(text, "无效的有理数")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(text, "分母为零")
    return Fraction(int(num), int(den) if den is not None else 1)


def parse_rationals(text: str) -> tuple[Fraction, ...]:
    """解析以逗号分隔的有理数列表, 例如 `0,1/2,3`"""
    if not text.strip():
        return ()
    return tuple(parse_rational(item) for item in text.split(","))


def format_rational(value: Fraction | int) -> str:
    """有理数转文本"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_json(value: Fraction | int) -> dict[str, str]:
    """有理数的 JSON 形式, 分子分母均为字符串"""
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def format_coefficient(coeff: Fraction, body: str) -> str:
    """渲染 `系数*单项式`, 系数为 ±1 时省略"""
    if not body:
        return format_rational(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    return f"{format_rational(coeff)}*{body}"


def join_terms(terms: Iterable[str]) -> str:
    """把若干项拼接为 `a + b - c` 形式"""
    out = ""
    for term in terms:
        if not out:
            out = term
        elif term.startswith("-"):
            out += f" - {term[1:]}"
        else:
            out += f" + {term}"
    return out or "0"


def dumps(obj: Any) -> str:
    """确定性的 JSON 序列化 (键排序)"""
    return json.dumps(obj, option=json.OPT_SORT_KEYS | json.OPT_INDENT_2).decode()


def seeded_rng(seed: int, key: str = "") -> random.Random:
    """由种子与实例键派生独立的随机数生成器

    字符串种子不经过 `hash()`, 因此跨进程结果一致.
    """
    return random.Random(f"{seed}/{key}")


def random_rational(rng: random.Random, bound: int = 50, *, nonzero: bool = True) -> Fraction:
    """随机有理数, 分子分母绝对值不超过 bound"""
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if value or not nonzero:
            return value


def parallel_map(func: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> list[R]:
    """按提交顺序返回结果的并行 map

    Args:
        func: 模块级函数 (需要可 pickle)
        items: 输入序列
        jobs: 并行任务数, 1 表示在当前进程内顺序执行

    Returns:
        与输入顺序一致的结果列表
    """
    items = list(items)
    if jobs == 1 or len(items) <= 1:
        return [func(item) for item in items]
    logger.debug(f"并行执行 {len(items)} 个任务, n_jobs={jobs}")
    return list(Parallel(n_jobs=jobs)(delayed(func)(item) for item in items))
