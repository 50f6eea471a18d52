"""进程级记忆化缓存"""

import logging
from collections.abc import Callable
from functools import lru_cache
from typing import Any, TypeVar

logger = logging.getLogger("sympq.cache")

F = TypeVar("F", bound=Callable[..., Any])

_registry: list[Any] = []


def memoize(func: F) -> F:
    """无上限的 `lru_cache`, 并登记以便统一清空

    `lru_cache` 自身是线程安全的, 缓存命中与否不影响结果.
    """
    cached = lru_cache(maxsize=None)(func)
    _registry.append(cached)
    return cached  # type: ignore[return-value]


def clear_caches() -> None:
    """清空所有登记的缓存"""
    for cached in _registry:
        cached.cache_clear()
    logger.debug(f"已清空 {len(_registry)} 个缓存")


def cache_info() -> dict[str, int]:
    """各缓存当前条目数"""
    return {f"{c.__module__}.{c.__qualname__}": c.cache_info().currsize for c in _registry}
