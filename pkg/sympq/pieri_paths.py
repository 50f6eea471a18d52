"""万有辛 P 函数乘单行函数的 Pieri 规则

同一组系数 f̃^λ_{μ,(r)} 有四种算法: 闭式、b 级数行列式、图 G' 上的不相交格路、Γ 中的结构常数.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .exact_algebra import LaurentPoly, RingMatrix, TruncSeries, determinant
from .exceptions import ConsistencyError, DomainError, NotInSpanError
from .gamma_ring import BasisExpansion, BasisTag, structure_constants
from .laurent_models import f_tilde, pi_tilde_series
from .partitions import (
    StrictPartition,
    components,
    interlacing_above,
    interlacing_below,
    length_drop_indicator,
    pieri_kappas,
)
from .utils.cache import memoize

logger = logging.getLogger("sympq.pieri_paths")

Vertex = tuple[Literal["A", "B", "C"], int]
Path = tuple[Vertex, ...]


def _length_ok(lam: StrictPartition, mu: StrictPartition) -> bool:
    return lam.length in (mu.length, mu.length + 1)


def pieri_closed(lam: StrictPartition, mu: StrictPartition, r: int) -> int:
    """闭式 sum_κ 2^{a(μ,κ)+a(λ,κ)-χ[l(μ)>l(κ)]-1}

    Raises:
        DomainError: r < 1
    """
    if r < 1:
        raise DomainError(f"Pieri 规则要求 r >= 1, 实际为 {r}")
    if not _length_ok(lam, mu):
        return 0
    total = 0
    for kappa in pieri_kappas(mu, lam, r):
        exponent = components(mu, kappa) + components(lam, kappa) - length_drop_indicator(mu, kappa) - 1
        if exponent < 0:
            raise ConsistencyError(f"Pieri 闭式出现负指数: λ={lam}, μ={mu}, κ={kappa}")
        total += 2**exponent
    return total


@dataclass(frozen=True)
class PieriCoefficient:
    """Pieri 系数 f̃^λ_{μ,(r)}

    Attributes:
        lam: 结果形状 λ
        mu: 被乘形状 μ
        r: 单行长度
        value: 系数值
    """

    lam: StrictPartition
    mu: StrictPartition
    r: int
    value: int

    def __post_init__(self) -> None:
        if self.value < 0 or (self.value and not _length_ok(self.lam, self.mu)):
            raise ConsistencyError(f"Pieri 系数不合法: λ={self.lam}, μ={self.mu}, 值 {self.value}")

    @classmethod
    def compute(cls, lam: StrictPartition, mu: StrictPartition, r: int) -> "PieriCoefficient":
        """用闭式计算"""
        return cls(lam, mu, r, pieri_closed(lam, mu, r))


def pieri_expand(mu: StrictPartition, r: int) -> dict[StrictPartition, int]:
    """P^C_μ P^C_{(r)} 在万有辛 P 基下的展开, 只含非零项"""
    if r < 1:
        raise DomainError(f"Pieri 规则要求 r >= 1, 实际为 {r}")
    candidates: set[StrictPartition] = set()
    for kappa in interlacing_below(mu):
        extra = r - (mu.weight - kappa.weight)
        if extra >= 0:
            candidates.update(interlacing_above(kappa, extra))
    result = {}
    for lam in sorted(candidates):
        value = pieri_closed(lam, mu, r)
        if value:
            result[lam] = value
    return result


def pieri_expansion(mu: StrictPartition, r: int) -> BasisExpansion:
    """pieri_expand 的结果包装为 PC 基展开"""
    return BasisExpansion(BasisTag.SympP, {lam: Fraction(c) for lam, c in pieri_expand(mu, r).items()})


def r1_support(mu: StrictPartition) -> set[StrictPartition]:
    """r = 1 时的支撑: 加一格, 或去一格且长度不变"""
    out: set[StrictPartition] = set()
    parts = list(mu.parts)
    for i in range(len(parts) + 1):
        grown = [*parts, 0] if i == len(parts) else list(parts)
        grown[i] += 1
        candidate = [p for p in grown if p]
        if all(a > b for a, b in zip(candidate, candidate[1:])):
            out.add(StrictPartition(tuple(candidate)))
    for i in range(len(parts)):
        shrunk = list(parts)
        shrunk[i] -= 1
        if shrunk[i] and all(a > b for a, b in zip(shrunk, shrunk[1:])):
            out.add(StrictPartition(tuple(shrunk)))
    return out


@dataclass(frozen=True)
class BSeries:
    """b^r_s(z), 按 z 截断的整系数级数"""

    r: int
    s: int
    series: TruncSeries


def _closed_b(r: int, s: int, order: int) -> TruncSeries:
    coeffs = [0] * (order + 1)

    def add(power: int, value: int) -> None:
        if 0 <= power <= order:
            coeffs[power] += value

    if s == 0:
        add(r, 1 if r == 0 else 2)
    elif r > 0:
        # 2 z^{|s-r|} (1+z^2)(1-z^{2m})/(1-z^2), m = min(r, s)
        shift = abs(s - r)
        for j in range(min(r, s)):
            add(shift + 2 * j, 2)
            add(shift + 2 * j + 2, 2)
        if r == s:
            add(0, -1)
    return TruncSeries(tuple(coeffs))


def b_series(r: int, s: int, order: int) -> BSeries:
    """b^r_s(z) 的闭式, 截断到 z^order

    Raises:
        DomainError: 参数为负
    """
    if min(r, s, order) < 0:
        raise DomainError(f"b 级数的参数必须非负: r={r}, s={s}, K={order}")
    return BSeries(r, s, _closed_b(r, s, order))


@memoize
def b_series_recursive(r: int, s: int, order: int) -> TruncSeries:
    """用 f̃_1 乘法规则给出的递推计算 b^r_s"""
    if s == 0:
        return _closed_b(r, 0, order)
    if r == 0:
        if s <= 2:
            return TruncSeries.zeros(order)
        return -b_series_recursive(0, s - 2, order)
    total = b_series_recursive(r - 1, s - 1, order) + b_series_recursive(r + 1, s - 1, order)
    if s >= 3:
        total = total - b_series_recursive(r, s - 2, order)
    return total


def expand_in_f_tilde(p: LaurentPoly) -> dict[int, Fraction]:
    """单变量对称 Laurent 多项式在 f̃_d 下的展开

    Raises:
        NotInSpanError: 不在 f̃_d 的张成空间内
    """
    residual = p
    coeffs: dict[int, Fraction] = {}
    while residual:
        (d,), c = residual.leading_term()
        if d < 0:
            raise NotInSpanError(f"{p} 不能用 f̃_d 展开")
        coeffs[d] = c
        residual = residual - f_tilde(d).scale(c)
    return coeffs


@memoize
def _f_tilde_times_pi(s: int, order: int) -> tuple[dict[int, Fraction], ...]:
    series = pi_tilde_series(1, order)
    return tuple(expand_in_f_tilde(f_tilde(s) * series.coeff(k)) for k in range(order + 1))


def b_series_from_products(r: int, s: int, order: int) -> TruncSeries:
    """展开 f̃_s(x) Π̃_z(x), 取 f̃_r 的系数"""
    layers = _f_tilde_times_pi(s, order)
    return TruncSeries(tuple(layer.get(r, Fraction(0)) for layer in layers))


def check_b_series(s: int, order: int) -> bool:
    """闭式、递推、乘积展开三者一致, r 取遍 0..s+order"""
    for r in range(s + order + 1):
        closed = b_series(r, s, order).series
        for name, other in (("递推", b_series_recursive(r, s, order)), ("乘积展开", b_series_from_products(r, s, order))):
            if other != closed:
                logger.warning(f"b^{r}_{s} 的{name}结果 {other} 与闭式 {closed} 不一致")
                return False
    return True


def edges_from(v: Vertex) -> list[tuple[Vertex, int]]:
    """图 G' 中从 v 出发的边及其 z 次数, 竖直边为 0"""
    row, i = v
    if row == "A":
        out: list[tuple[Vertex, int]] = [(("B", i), 0)]
        if i >= 1:
            out.append((("A", i - 1), 1))
        # A_1 -> B_0 不是边
        if i >= 2:
            out.append((("B", i - 1), 1))
        return out
    if row == "B":
        return [(("C", i), 0), (("C", i + 1), 1)]
    return [(("C", i + 1), 1)]


def path_degree(path: Path) -> int:
    """路径的权 z^k 中的 k, 即非竖直步数"""
    return sum(1 for u, v in zip(path, path[1:]) if u[1] != v[1])


def enumerate_paths(s: int, r: int) -> Iterator[Path]:
    """图 G' 上从 A_s 到 C_r 的全部格路"""
    target: Vertex = ("C", r)

    def walk(path: tuple[Vertex, ...]) -> Iterator[Path]:
        v = path[-1]
        if v == target:
            yield path
            return
        for w, _ in edges_from(v):
            if w[0] == "C" and w[1] > r:
                continue
            yield from walk((*path, w))

    return walk((("A", s),))


@memoize
def path_weight_sum(s: int, r: int, order: int) -> TruncSeries:
    """w^r_s(z): A_s 到 C_r 的格路权之和, 用动态规划计算"""
    if r == 0:
        # 只能经过 A_0 -> B_0 -> C_0
        return TruncSeries.monomial(s, order)
    z = TruncSeries.monomial(1, order)
    if s == 0:
        return TruncSeries.monomial(r, order, 2)
    if r == s == 1:
        return TruncSeries.constant(1, order) + TruncSeries.monomial(2, order, 2)
    if r <= s - 2:
        return z * path_weight_sum(s - 1, r, order)
    if r == s - 1:
        return z * path_weight_sum(s - 1, s - 1, order) + z
    if r == s:
        return z * z * path_weight_sum(s - 1, s - 1, order) + 1 + TruncSeries.monomial(2, order, 3)
    if r == s + 1:
        return z * path_weight_sum(s, s, order) + z
    return z * path_weight_sum(s, r - 1, order)


def enumerated_weight_sum(s: int, r: int, order: int) -> TruncSeries:
    """逐条枚举格路得到 w^r_s"""
    coeffs = [0] * (order + 1)
    for path in enumerate_paths(s, r):
        k = path_degree(path)
        if k <= order:
            coeffs[k] += 1
    return TruncSeries(tuple(coeffs))


def _endpoints(lam: StrictPartition, mu: StrictPartition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    ell = lam.length
    return mu.padded(ell), lam.parts


def _families(lam: StrictPartition, mu: StrictPartition) -> Iterator[tuple[Path, ...]]:
    """L_0(μ;λ): 起点 A_{μ_i}, 终点 C_{λ_i} 的不相交格路族"""
    starts, ends = _endpoints(lam, mu)
    choices = [list(enumerate_paths(s, r)) for s, r in zip(starts, ends)]

    def build(i: int, used: frozenset[Vertex], chosen: tuple[Path, ...]) -> Iterator[tuple[Path, ...]]:
        if i == len(choices):
            yield chosen
            return
        for path in choices[i]:
            vertices = frozenset(path)
            if used.isdisjoint(vertices):
                yield from build(i + 1, used | vertices, (*chosen, path))

    return build(0, frozenset(), ())


def path_family_series(lam: StrictPartition, mu: StrictPartition, order: int) -> TruncSeries:
    """不相交格路族的权之和, 长度条件不满足时为 0"""
    coeffs = [0] * (order + 1)
    if _length_ok(lam, mu):
        for family in _families(lam, mu):
            k = sum(path_degree(p) for p in family)
            if k <= order:
                coeffs[k] += 1
    return TruncSeries(tuple(coeffs))


def u_series(lam: StrictPartition, mu: StrictPartition, order: int) -> TruncSeries:
    """u^λ_μ(z) = det(b^{λ_i}_{μ_j}(z)), l(λ) = l(μ)+1 时 μ 补一个 0"""
    if not _length_ok(lam, mu):
        return TruncSeries.zeros(order)
    starts, ends = _endpoints(lam, mu)
    size = len(ends)
    one = TruncSeries.constant(1, order)
    matrix = RingMatrix.from_function(size, size, lambda i, j: _closed_b(ends[i], starts[j], order), one)
    return determinant(matrix)


def pieri_from_series(lam: StrictPartition, mu: StrictPartition, r: int, source: Literal["det", "paths"] = "det") -> Fraction:
    """从 u^λ_μ(z) = δ_{λ,μ} + 2 sum_r f̃ z^r 中读出 f̃^λ_{μ,(r)}"""
    series = u_series(lam, mu, r) if source == "det" else path_family_series(lam, mu, r)
    return Fraction(series.coeff(r)) / 2


def class_count(mu: StrictPartition, lam: StrictPartition, kappa: StrictPartition) -> int:
    """经过 B_{κ_i} 的不相交格路族个数 2^{a(λ,κ)+a(μ,κ)-χ[l(μ)>l(κ)]}

    Raises:
        DomainError: μ ≻ κ 或 λ ≻ κ 不成立
    """
    return 2 ** (components(lam, kappa) + components(mu, kappa) - length_drop_indicator(mu, kappa))


def count_families_through(mu: StrictPartition, lam: StrictPartition, kappa: StrictPartition) -> int:
    """枚举 L_0(μ;λ) 中第 i 条路经过 B_{κ_i} 的族"""
    if not _length_ok(lam, mu):
        return 0
    levels = kappa.padded(lam.length)
    if len(levels) > lam.length:
        return 0
    return sum(
        1 for family in _families(lam, mu) if all(("B", k) in path for path, k in zip(family, levels))
    )


def pieri_agreement(mu: StrictPartition, r: int) -> bool:
    """闭式、b 行列式、格路族、Γ 结构常数四者一致"""
    product = structure_constants(mu, StrictPartition((r,)))
    closed = pieri_expand(mu, r)
    support = set(closed) | set(product.coeffs)
    for lam in sorted(support):
        values = {
            "闭式": Fraction(closed.get(lam, 0)),
            "行列式": pieri_from_series(lam, mu, r, "det"),
            "格路": pieri_from_series(lam, mu, r, "paths"),
            "结构常数": product.coefficient(lam),
        }
        if len(set(values.values())) > 1:
            logger.warning(f"Pieri 系数不一致 λ={lam}, μ={mu}, r={r}: {values}")
            return False
    return True
