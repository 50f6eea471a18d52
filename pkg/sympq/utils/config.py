"""运行配置"""

import os
from typing import TypedDict

from ..exceptions import DomainError, ParseError

SEED_ENV = "SYMPQ_SEED"


class DeskLimits(TypedDict):
    """桌面规模的验证上限"""

    max_weight: int
    max_n: int
    max_weyl_n: int
    max_pfaffian: int
    max_order: int
    max_points: int


DEFAULT_LIMITS = DeskLimits(
    max_weight=20,
    max_n=4,
    max_weyl_n=4,
    max_pfaffian=14,
    max_order=24,
    max_points=200,
)


def default_seed() -> int:
    """读取环境变量 `SYMPQ_SEED`, 未设置时为 0

    Raises:
        ParseError: 环境变量不是整数
    """
    text = os.environ.get(SEED_ENV, "").strip()
    if not text:
        return 0
    try:
        return int(text)
    except ValueError:
        raise ParseError(text, f"{SEED_ENV} 不是整数") from None


def check_limit(name: str, value: int, limit: int, minimum: int = 0) -> int:
    """检查参数是否在桌面规模范围内

    Raises:
        DomainError: 超出范围
    """
    if not minimum <= value <= limit:
        raise DomainError(f"参数 {name}={value} 超出范围 [{minimum}, {limit}]")
    return value
