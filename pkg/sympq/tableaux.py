"""辛带撇移位表

字母表 1' < 1 < ~1' < ~1 < 2' < 2 < ... , 文本中 `~` 表示横杠, `'` 表示撇.
"""

import logging
import re
from collections import Counter
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering

from .exact_algebra import LaurentPoly, RingMatrix, determinant
from .exceptions import DomainError, ParseError
from .partitions import Cell, SkewShiftedShape, StrictPartition, staircase, staircase_complement, strict_partitions_of
from .utils.cache import memoize

logger = logging.getLogger("sympq.tableaux")

_ENTRY_RE = re.compile(r"^(~?)(\d+)('?)$")


@total_ordering
@dataclass(frozen=True)
class AlphabetEntry:
    """字母表中的字母 k', k, ~k', ~k

    Attributes:
        level: 下标 k
        barred: 是否带横杠
        primed: 是否带撇
    """

    level: int
    barred: bool = False
    primed: bool = False

    @property
    def rank(self) -> int:
        """在全序中的位置"""
        return 4 * (self.level - 1) + 2 * self.barred + (not self.primed)

    @property
    def sign(self) -> int:
        """对 x_k 指数的贡献"""
        return -1 if self.barred else 1

    def __lt__(self, other: "AlphabetEntry") -> bool:
        return self.rank < other.rank

    def __str__(self) -> str:
        return f"{'~' if self.barred else ''}{self.level}{chr(39) if self.primed else ''}"

    @classmethod
    def parse(cls, text: str) -> "AlphabetEntry":
        """解析 `~3'` 形式的文本"""
        match = _ENTRY_RE.match(text.strip())
        if match is None or int(match.group(2)) < 1:
            raise ParseError(text, "无效的字母")
        return cls(int(match.group(2)), bool(match.group(1)), bool(match.group(3)))


def alphabet(n: int) -> list[AlphabetEntry]:
    """按全序排列的字母表 A_n"""
    return [AlphabetEntry(k, barred, primed) for k in range(1, n + 1) for barred in (False, True) for primed in (True, False)]


@dataclass(frozen=True)
class Tableau:
    """移位斜杨图上的填充

    Attributes:
        shape: 移位斜杨图
        entries: 格子 -> 字母
    """

    shape: SkewShiftedShape
    entries: Mapping[Cell, AlphabetEntry] = field(default_factory=dict)

    def __getitem__(self, cell: Cell) -> AlphabetEntry:
        return self.entries[cell]

    def is_valid(self, n: int, *, primed_diagonal: bool = True) -> bool:
        """是否满足五条填充规则"""
        cells = self.shape.cells()
        if set(cells) != set(self.entries):
            return False
        if any(not 1 <= e.level <= n for e in self.entries.values()):
            return False
        diagonal_levels = []
        for (i, j), entry in self.entries.items():
            right, below = self.entries.get((i, j + 1)), self.entries.get((i + 1, j))
            if right is not None and (right < entry or (right == entry and entry.primed)):
                return False
            if below is not None and (below < entry or (below == entry and not entry.primed)):
                return False
            if i == j:
                if entry.primed and not primed_diagonal:
                    return False
                diagonal_levels.append(entry.level)
        # 行、列内的格子是连续的, 相邻比较即覆盖第三、四条规则
        return len(diagonal_levels) == len(set(diagonal_levels))

    def exponents(self, n: int) -> tuple[int, ...]:
        """x^T 的指数向量"""
        exp = [0] * n
        for entry in self.entries.values():
            exp[entry.level - 1] += entry.sign
        return tuple(exp)


def _fillings(shape: SkewShiftedShape, n: int, primed_diagonal: bool) -> Iterator[dict[Cell, AlphabetEntry]]:
    """按行优先逐格回溯, 产出的字典在迭代过程中会被复用"""
    cells = shape.cells()
    letters = alphabet(n)
    filling: dict[Cell, AlphabetEntry] = {}
    used_levels: set[int] = set()

    def fill(index: int) -> Iterator[dict[Cell, AlphabetEntry]]:
        if index == len(cells):
            yield filling
            return
        i, j = cells[index]
        left, up = filling.get((i, j - 1)), filling.get((i - 1, j))
        for letter in letters:
            if left is not None and (letter < left or (letter == left and letter.primed)):
                continue
            if up is not None and (letter < up or (letter == up and not letter.primed)):
                continue
            if i == j:
                if (letter.primed and not primed_diagonal) or letter.level in used_levels:
                    continue
                used_levels.add(letter.level)
            filling[i, j] = letter
            yield from fill(index + 1)
            del filling[i, j]
            if i == j:
                used_levels.discard(letter.level)

    return fill(0)


def enumerate_tableaux(shape: SkewShiftedShape, n: int, *, primed_diagonal: bool = True) -> Iterator[Tableau]:
    """枚举全部填充, primed_diagonal 为 False 时对角线上不允许带撇字母"""
    for filling in _fillings(shape, n, primed_diagonal):
        yield Tableau(shape, dict(filling))


def weight(t: Tableau, n: int) -> LaurentPoly:
    """权 x^T, x_k 的指数为 m(k')+m(k)-m(~k')-m(~k)"""
    return LaurentPoly.monomial(t.exponents(n))


@memoize
def tableau_sum(shape: SkewShiftedShape, n: int, *, primed_diagonal: bool = True) -> LaurentPoly:
    """全部填充的权之和"""
    counter: Counter[tuple[int, ...]] = Counter()
    for filling in _fillings(shape, n, primed_diagonal):
        exp = [0] * n
        for entry in filling.values():
            exp[entry.level - 1] += entry.sign
        counter[tuple(exp)] += 1
    logger.debug(f"形状 {shape} 在 n={n} 下共 {sum(counter.values())} 个表")
    return LaurentPoly(n, counter)


def flip(t: Tableau, r: int, n: int) -> Tableau:
    """沿 S(δ_r) 反对角线翻转并重新标号, 得到形状 μ*/λ* 的表

    k', k, ~k', ~k 分别换为 ~l, ~l', l, l', 其中 l = n+1-k.

    Raises:
        DomainError: 形状不含于 δ_r
    """
    outer, inner = t.shape.outer, t.shape.inner
    if not staircase(r).contains(outer):
        raise DomainError(f"{outer} 不含于 δ_{r}")
    shape = SkewShiftedShape(staircase_complement(inner, r), staircase_complement(outer, r))
    entries = {}
    for (i, j), entry in t.entries.items():
        entries[r + 1 - j, r + 1 - i] = AlphabetEntry(n + 1 - entry.level, not entry.barred, not entry.primed)
    return Tableau(shape, entries)


def _chain_sums(inner: StrictPartition, outer: StrictPartition, level: int, n: int) -> LaurentPoly:
    if level > n:
        return LaurentPoly.one(n) if inner == outer else LaurentPoly.zero(n)
    result = LaurentPoly.zero(n)
    candidates = [outer] if level == n else [
        nu for d in range(inner.weight, outer.weight + 1) for nu in strict_partitions_of(d)
        if nu.contains(inner) and outer.contains(nu)
    ]
    for nu in candidates:
        one_variable = tableau_sum(SkewShiftedShape(nu, inner), 1).embed(n, level - 1)
        if one_variable:
            result = result + one_variable * _chain_sums(nu, outer, level + 1, n)
    return result


def chain_factorization_sum(shape: SkewShiftedShape, n: int) -> LaurentPoly:
    """按字母下标逐层分解: sum over μ=ν^0 ⊆ ν^1 ⊆ ... ⊆ ν^n=λ 的单变量表和之积"""
    return _chain_sums(shape.inner, shape.outer, 1, n)


def one_row_sum(r: int, k: int) -> LaurentPoly:
    """单变量单行斜形状 (r)/(k) 的表和, r < k 时为 0"""
    if r < 0 or k < 0 or r < k:
        return LaurentPoly.zero(1)
    return tableau_sum(SkewShiftedShape(StrictPartition.of((r,)), StrictPartition.of((k,))), 1)


def one_variable_determinant(shape: SkewShiftedShape) -> LaurentPoly:
    """det(Q^tab_{(λ_i)/(μ_j)}(x)), μ 补零到 l(λ) 个部分"""
    lam = shape.outer.parts
    mu = shape.inner.padded(len(lam))
    if len(mu) > len(lam):
        return LaurentPoly.zero(1)
    size = len(lam)
    return determinant(RingMatrix.from_function(size, size, lambda i, j: one_row_sum(lam[i], mu[j]), LaurentPoly.one(1)))


def fac_weight(t: Tableau, n: int, a: Sequence[Fraction]) -> LaurentPoly:
    """阶乘权: 格子 (i,j) 上 k', k, ~k', ~k 分别取 x_k - a_{j-i}, x_k + a_{j-i}, x_k^{-1} - a_{j-i}, x_k^{-1} + a_{j-i}

    Raises:
        DomainError: 参数个数不足
    """
    result = LaurentPoly.one(n)
    for (i, j), entry in t.entries.items():
        if j - i >= len(a):
            raise DomainError(f"阶乘参数不足, 需要 a_{j - i}")
        shift = Fraction(a[j - i])
        factor = LaurentPoly.variable(n, entry.level - 1, -1 if entry.barred else 1)
        result = result * (factor - shift if entry.primed else factor + shift)
    return result


def render_tableau(t: Tableau) -> str:
    """文本形式: 每行一列格子, 内形格子为 `.`, 移位空白为空格"""
    outer = t.shape.outer
    width = max((len(str(e)) for e in t.entries.values()), default=1)
    lines = []
    for i in range(1, outer.length + 1):
        row = []
        for j in range(1, i + outer.part(i)):
            if j < i:
                row.append(" " * width)
            elif (i, j) in t.entries:
                row.append(str(t.entries[i, j]).rjust(width))
            else:
                row.append(".".rjust(width))
        lines.append(" ".join(row).rstrip())
    return "\n".join(lines)


def tableau_to_json(t: Tableau) -> list[dict]:
    """JSON 形式, 按行优先列出格子"""
    return [
        {"row": i, "col": j, "level": e.level, "primed": e.primed, "barred": e.barred}
        for (i, j), e in sorted(t.entries.items())
    ]
