from .cache import cache_info, clear_caches, memoize
from .common import (
    dumps,
    format_rational,
    parallel_map,
    parse_rational,
    parse_rationals,
    random_rational,
    rational_json,
    seeded_rng,
)
from .config import DEFAULT_LIMITS, DeskLimits, default_seed

__all__ = [
    "DEFAULT_LIMITS",
    "DeskLimits",
    "cache_info",
    "clear_caches",
    "default_seed",
    "dumps",
    "format_rational",
    "memoize",
    "parallel_map",
    "parse_rational",
    "parse_rationals",
    "random_rational",
    "rational_json",
    "seeded_rng",
]
