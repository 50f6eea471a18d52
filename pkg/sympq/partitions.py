"""分拆与移位杨图"""

import logging
import re
import sys
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import total_ordering
from itertools import zip_longest

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

from .exceptions import DomainError, ParseError

logger = logging.getLogger("sympq.partitions")

Cell = tuple[int, int]

_PARTITION_RE = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")


@total_ordering
@dataclass(frozen=True, eq=False)
class Partition:
    """普通分拆, 各部分为正整数且弱递减

    Attributes:
        parts: 各部分组成的元组
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise DomainError(f"分拆的各部分必须为正整数: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"分拆的各部分必须弱递减: {parts}")
        object.__setattr__(self, "parts", parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return format_partition(self.parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def part(self, i: int) -> int:
        """第 i 个部分 (从 1 开始), 越界视为 0"""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def length(self) -> int:
        """长度 l(λ)"""
        return len(self.parts)

    @property
    def weight(self) -> int:
        """大小 |λ|"""
        return sum(self.parts)

    def is_empty(self) -> bool:
        """是否为空分拆"""
        return not self.parts

    def is_hook(self) -> bool:
        """是否为钩形 (r, 1, ..., 1)"""
        return all(p == 1 for p in self.parts[1:])

    def contains(self, other: "Partition") -> bool:
        """逐部分包含 λ ⊇ μ"""
        return len(other) <= len(self) and all(a >= b for a, b in zip(self.parts, other.parts))

    def padded(self, length: int) -> tuple[int, ...]:
        """补零到指定长度"""
        return self.parts + (0,) * max(0, length - len(self.parts))

    def multiplicity(self, k: int) -> int:
        """部分 k 出现的次数"""
        return self.parts.count(k)


@dataclass(frozen=True, eq=False)
class StrictPartition(Partition):
    """严格分拆, 各部分严格递减"""

    def __post_init__(self) -> None:
        super().__post_init__()
        if any(a == b for a, b in zip(self.parts, self.parts[1:])):
            raise DomainError(f"严格分拆的各部分必须严格递减: {self.parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> Self:
        """去掉零后构造"""
        return cls(tuple(p for p in parts if p))

    def cells(self) -> list[Cell]:
        """移位杨图 S(λ) 的格子, 行优先"""
        return [(i, j) for i in range(1, len(self.parts) + 1) for j in range(i, self.parts[i - 1] + i)]


@dataclass(frozen=True)
class SkewShiftedShape:
    """移位斜杨图 S(λ/μ)

    Attributes:
        outer: 外形 λ
        inner: 内形 μ, 需满足 S(μ) ⊆ S(λ)
    """

    outer: StrictPartition
    inner: StrictPartition = field(default_factory=StrictPartition)

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise DomainError(f"{self.inner} 不包含于 {self.outer}")

    def cells(self) -> list[Cell]:
        """S(λ)∖S(μ) 的格子, 行优先"""
        return [(i, j) for i, j in self.outer.cells() if not (i <= self.inner.length and j < self.inner.part(i) + i)]

    def row(self, i: int) -> range:
        """第 i 行格子的列号范围 (可能为空)"""
        start = i + self.inner.part(i)
        return range(start, i + self.outer.part(i))

    def size(self) -> int:
        """格子个数"""
        return self.outer.weight - self.inner.weight

    def __str__(self) -> str:
        if self.inner.is_empty():
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


def format_partition(parts: Iterable[int]) -> str:
    """分拆转文本, 空分拆为 `-`"""
    parts = tuple(parts)
    return ",".join(map(str, parts)) if parts else "-"


def parse_partition(text: str, *, strict: bool = True) -> StrictPartition | Partition:
    """解析 `4,3,1` 形式的分拆文本

    Args:
        text: 分拆文本, 空分拆写作 `-` 或空串
        strict: 是否要求严格分拆

    Raises:
        ParseError: 语法错误
        DomainError: 非递减或 strict 下有重复部分
    """
    stripped = text.strip()
    if stripped in {"", "-", "∅"}:
        return StrictPartition() if strict else Partition()
    if not _PARTITION_RE.match(stripped):
        raise ParseError(text, "无效的分拆")
    parts = tuple(int(p) for p in stripped.split(",") if int(p))
    return StrictPartition(parts) if strict else Partition(parts)


def parse_strict(text: str) -> StrictPartition:
    """解析严格分拆"""
    result = parse_partition(text, strict=True)
    assert isinstance(result, StrictPartition)
    return result


def parse_skew(text: str) -> tuple[StrictPartition, StrictPartition]:
    """解析 `λ/μ` 形式的文本, 没有 `/` 时 μ 为空"""
    outer, _, inner = text.partition("/")
    return parse_strict(outer), parse_strict(inner)


def add(lam: Partition, mu: Partition) -> StrictPartition:
    """逐部分相加 λ + μ"""
    return StrictPartition(tuple(a + b for a, b in zip_longest(lam.parts, mu.parts, fillvalue=0)))


def interlaces(lam: Partition, mu: Partition) -> bool:
    """λ ≻ μ: λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ ... (补零)"""
    n = max(lam.length, mu.length) + 1
    a, b = lam.padded(n), mu.padded(n)
    return all(a[i] >= b[i] for i in range(n)) and all(b[i] >= a[i + 1] for i in range(n - 1))


def components(lam: StrictPartition, mu: StrictPartition) -> int:
    """交错对 λ ≻ μ 的 a(λ, μ)

    Raises:
        DomainError: λ 与 μ 不交错
    """
    if not interlaces(lam, mu):
        raise DomainError(f"{lam} 与 {mu} 不交错")
    ell = lam.length
    count = sum(1 for i in range(1, ell) if lam.part(i) > mu.part(i) > lam.part(i + 1))
    if ell and lam.part(ell) > mu.part(ell):
        count += 1
    return count


def cell_components(cells: Iterable[Cell]) -> int:
    """格子集合按共边相邻的连通分支数"""
    remaining = set(cells)
    count = 0
    while remaining:
        count += 1
        stack = [remaining.pop()]
        while stack:
            i, j = stack.pop()
            for cell in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if cell in remaining:
                    remaining.remove(cell)
                    stack.append(cell)
    return count


def length_drop_indicator(mu: Partition, kappa: Partition) -> int:
    """χ[l(μ) > l(κ)]"""
    return int(mu.length > kappa.length)


def staircase(r: int) -> StrictPartition:
    """阶梯分拆 δ_r = (r, r-1, ..., 1)"""
    return StrictPartition(tuple(range(r, 0, -1)))


def staircase_complement(lam: StrictPartition, r: int) -> StrictPartition:
    """λ 在 δ_r 中的补 λ*, 满足 {λ_i} ⊔ {λ*_i} = {1, ..., r}

    Raises:
        DomainError: λ 不含于 δ_r
    """
    if lam.length and lam.part(1) > r:
        raise DomainError(f"{lam} 不含于 δ_{r}")
    present = set(lam.parts)
    return StrictPartition(tuple(k for k in range(r, 0, -1) if k not in present))


def strict_partitions_of(n: int, max_part: int | None = None) -> list[StrictPartition]:
    """大小为 n 的全部严格分拆, 按部分字典序降序"""
    out: list[StrictPartition] = []

    def build(rest: int, bound: int, prefix: tuple[int, ...]) -> None:
        if rest == 0:
            out.append(StrictPartition(prefix))
            return
        for p in range(min(rest, bound), 0, -1):
            build(rest - p, p - 1, (*prefix, p))

    build(n, n if max_part is None else max_part, ())
    return out


def enumerate_strict(max_weight: int, max_length: int | None = None) -> Iterator[StrictPartition]:
    """按大小升序, 同大小按部分字典序降序枚举严格分拆"""
    for n in range(max_weight + 1):
        for lam in strict_partitions_of(n):
            if max_length is None or lam.length <= max_length:
                yield lam


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """大小为 n 的全部普通分拆, 按部分字典序降序"""
    out: list[Partition] = []

    def build(rest: int, bound: int, prefix: tuple[int, ...]) -> None:
        if rest == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(rest, bound), 0, -1):
            build(rest - p, p, (*prefix, p))

    build(n, n if max_part is None else max_part, ())
    return out


def enumerate_partitions(max_weight: int, max_length: int | None = None) -> Iterator[Partition]:
    """按大小升序枚举普通分拆"""
    for n in range(max_weight + 1):
        for lam in partitions_of(n):
            if max_length is None or lam.length <= max_length:
                yield lam


def odd_partitions_of(n: int) -> list[Partition]:
    """各部分均为奇数的分拆"""
    return [lam for lam in partitions_of(n) if all(p % 2 for p in lam.parts)]


def interlacing_below(mu: StrictPartition) -> list[StrictPartition]:
    """所有满足 μ ≻ κ 的严格分拆 κ, 按字典序升序"""
    ell = mu.length
    choices = []
    for i in range(1, ell + 1):
        choices.append(range(mu.part(i + 1), mu.part(i) + 1))
    out: set[StrictPartition] = set()

    def build(i: int, prefix: tuple[int, ...]) -> None:
        if i == ell:
            if all(a > b for a, b in zip(prefix, prefix[1:]) if b):
                out.add(StrictPartition.of(prefix))
            return
        for k in choices[i]:
            build(i + 1, (*prefix, k))

    build(0, ())
    return sorted(out)


def interlacing_above(kappa: StrictPartition, extra: int) -> list[StrictPartition]:
    """所有满足 λ ≻ κ 且 |λ| = |κ| + extra 的严格分拆 λ, 按字典序升序"""
    ell = kappa.length + 1
    out: list[StrictPartition] = []

    def build(i: int, prefix: tuple[int, ...], rest: int) -> None:
        if i > ell:
            if rest == 0:
                candidate = tuple(p for p in prefix if p)
                if all(a > b for a, b in zip(candidate, candidate[1:])):
                    out.append(StrictPartition(candidate))
            return
        low = kappa.part(i)
        high = low + rest if i == 1 else min(kappa.part(i - 1), low + rest)
        for value in range(low, high + 1):
            build(i + 1, (*prefix, value), rest - (value - low))

    build(1, (), extra)
    return sorted(out)


def pieri_kappas(mu: StrictPartition, lam: StrictPartition, r: int) -> list[StrictPartition]:
    """所有满足 μ ≻ κ, λ ≻ κ, (|μ|-|κ|)+(|λ|-|κ|) = r 的 κ, 按字典序升序"""
    total = mu.weight + lam.weight - r
    if total < 0 or total % 2:
        return []
    target = total // 2
    return [kappa for kappa in interlacing_below(mu) if kappa.weight == target and interlaces(lam, kappa)]
