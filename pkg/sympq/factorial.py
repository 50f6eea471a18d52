"""阶乘辛 Q 函数

阶乘参数 a = (a_0, a_1, ...) 取具体有理数, 关于 a 的恒等式用多组随机参数检验.
"""

import logging
import random
import sys
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

from .exact_algebra import LaurentPoly, RingMatrix, exact_divide, pfaffian, rational_determinant
from .exceptions import DomainError
from .gamma_ring import GammaElement, usymp_Q
from .laurent_models import SpecializationContext, g_tilde, nimmo_pfaffian, specialize, weyl_hall_littlewood_oracle
from .partitions import Partition, SkewShiftedShape, StrictPartition, strict_partitions_of
from .tableaux import enumerate_tableaux, fac_weight
from .utils.cache import memoize
from .utils.common import format_rational, parse_rationals, random_rational

logger = logging.getLogger("sympq.factorial")


@dataclass(frozen=True)
class FactorialParams:
    """阶乘参数 a_0, ..., a_{M-1}

    Attributes:
        values: 参数元组
    """

    values: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @classmethod
    def parse(cls, text: str) -> Self:
        """解析 `0,1/2,3` 形式的文本"""
        return cls(parse_rationals(text))

    @classmethod
    def zeros(cls, length: int) -> Self:
        """全零参数"""
        return cls((Fraction(0),) * length)

    @classmethod
    def random(cls, rng: random.Random, length: int, bound: int = 10) -> Self:
        """随机参数, a_0 = 0, 其余 |a_i| <= bound"""
        return cls((Fraction(0), *(random_rational(rng, bound, nonzero=False) for _ in range(length - 1))))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __str__(self) -> str:
        return ",".join(format_rational(v) for v in self.values)

    def require(self, length: int) -> None:
        """检查参数个数

        Raises:
            DomainError: 参数少于 length 个
        """
        if len(self.values) < length:
            raise DomainError(f"需要至少 {length} 个阶乘参数, 实际只有 {len(self.values)} 个")

    def prefix(self, length: int) -> "FactorialParams":
        """(a_0, ..., a_{length-1})"""
        self.require(length)
        return FactorialParams(self.values[:length])

    def shifted(self, k: int, r: int) -> "FactorialParams":
        """(0, a_{k+1}, ..., a_{r-1})"""
        self.require(r)
        return FactorialParams((Fraction(0), *self.values[k + 1 : r]))

    @property
    def is_zero(self) -> bool:
        """是否全为零"""
        return not any(self.values)


def elementary(k: int, values: Sequence[Fraction]) -> Fraction:
    """初等对称多项式 e_k 在给定值处的值, k < 0 或 k > 个数时为 0"""
    if k < 0 or k > len(values):
        return Fraction(0)
    e = [Fraction(1)] + [Fraction(0)] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * v
    return e[k]


def factorial_monomial(x: Any, a: FactorialParams, r: int) -> Any:
    """(x|a)^r = prod_{i<r} (x + a_i), x 可以是有理数或 Laurent 多项式

    Raises:
        DomainError: 参数个数不足
    """
    a.require(r)
    result = x * 0 + 1
    for i in range(r):
        result = result * (x + a[i])
    return result


@memoize
def g_tilde_fac(d: int, a: FactorialParams) -> LaurentPoly:
    """g̃_d(x|a) = 2((x|a)^d - (x^{-1}|a)^d)(x + x^{-1})/(x - x^{-1}), g̃_0 = 1"""
    if d < 0:
        return LaurentPoly.zero(1)
    if d == 0:
        return LaurentPoly.one(1)
    x, x_inv = LaurentPoly.variable(1, 0), LaurentPoly.variable(1, 0, -1)
    num = (factorial_monomial(x, a, d) - factorial_monomial(x_inv, a, d)) * (x + x_inv)
    return exact_divide(num, x - x_inv, 0).scale(2)


def g_tilde_fac_from_g(d: int, a: FactorialParams) -> LaurentPoly:
    """sum_{k=1}^{d} e_{d-k}(a_0, ..., a_{d-1}) g̃_k(x)"""
    if d <= 0:
        return g_tilde_fac(d, a)
    prefix = a.prefix(d).values
    result = LaurentPoly.zero(1)
    for k in range(1, d + 1):
        result = result + g_tilde(k).scale(elementary(d - k, prefix))
    return result


def d_coeff(lam: StrictPartition, mu: StrictPartition, a: FactorialParams) -> Fraction:
    """d_{λ,μ} = det(e_{λ_i-μ_j}(a_0, ..., a_{λ_i-1}))

    Raises:
        DomainError: l(λ) != l(μ) 或参数不足
    """
    if lam.length != mu.length:
        raise DomainError(f"d 系数要求等长: l({lam}) != l({mu})")
    if not lam.contains(mu):
        return Fraction(0)
    if lam.length:
        a.require(lam.part(1))
    rows = [[elementary(li - mj, a.values[:li]) for mj in mu.parts] for li in lam.parts]
    return rational_determinant(rows) if rows else Fraction(1)


def _same_length_subshapes(lam: StrictPartition) -> list[StrictPartition]:
    ell = lam.length
    low = ell * (ell + 1) // 2
    return [
        mu for d in range(low, lam.weight + 1) for mu in strict_partitions_of(d)
        if mu.length == ell and lam.contains(mu)
    ]


@memoize
def ufac_Q(lam: StrictPartition, a: FactorialParams) -> GammaElement:
    """万有阶乘辛 Q 函数 sum_μ d_{λ,μ} Q^C_μ, μ ⊆ λ 且 l(μ) = l(λ)"""
    result = GammaElement.zero()
    for mu in _same_length_subshapes(lam):
        coeff = d_coeff(lam, mu, a)
        if coeff:
            result = result + usymp_Q(mu).scale(coeff)
    return result


def ufac_Q_pair(r: int, s: int, a: FactorialParams) -> GammaElement:
    """两行情形, 按反对称延拓, s = 0 时为单行"""
    if r == s:
        return GammaElement.zero()
    if r < s:
        return -ufac_Q_pair(s, r, a)
    if s < 0:
        return GammaElement.zero()
    return ufac_Q(StrictPartition.of((r, s)), a)


def _skew_block(
    parts: Sequence[int],
    beta: Sequence[int],
    pair: Callable[[int, int], GammaElement],
    border: Callable[[int, int], GammaElement],
) -> GammaElement:
    """Pf(K, M; -M^T, O), K_{ij} = pair(α_i, α_j), M_{ij} = border(α_i, β_{s+1-j})"""
    ell, s = len(parts), len(beta)
    if ell + s == 0:
        return GammaElement.one()
    zero = GammaElement.zero()
    pairs = {(i, j): pair(parts[i], parts[j]) for i in range(ell) for j in range(i + 1, ell)}
    borders = {(i, j): border(parts[i], beta[s - 1 - j]) for i in range(ell) for j in range(s)}

    def entry(i: int, j: int) -> GammaElement:
        if i < ell and j < ell:
            if i == j:
                return zero
            return pairs[i, j] if i < j else -pairs[j, i]
        if i < ell:
            return borders[i, j - ell]
        if j < ell:
            return -borders[j, i - ell]
        return zero

    return pfaffian(RingMatrix.from_function(ell + s, ell + s, entry, GammaElement.one()))


def ufac_Q_pfaffian(lam: StrictPartition, a: FactorialParams) -> GammaElement:
    """Pf(Q^C_{(λ_i,λ_j)}(X|a)), l(λ) 为奇数时补 0"""
    parts = lam.parts + (0,) if lam.length % 2 else lam.parts
    return _skew_block(parts, (), lambda r, s: ufac_Q_pair(r, s, a), lambda r, k: GammaElement.zero())


def R_coeff(r: int, k: int, a: FactorialParams) -> GammaElement:
    """R^C_{r/k}(X|a)

    k = 0 时为 Q^C_{(r)}(X|a_0..a_{r-1}); 1 <= k <= r-1 时为 Q^C_{(r-k)}(X|0, a_{k+1}..a_{r-1});
    k = r 时为 1; 其余为 0.
    """
    if k < 0 or k > r:
        return GammaElement.zero()
    if k == r:
        return GammaElement.one()
    if k == 0:
        return ufac_Q(StrictPartition((r,)), a.prefix(r))
    return ufac_Q(StrictPartition((r - k,)), a.shifted(k, r))


@memoize
def ufac_Q_skew(lam: StrictPartition, mu: StrictPartition, a: FactorialParams) -> GammaElement:
    """斜阶乘辛 Q 函数, λ ⊉ μ 时为 0"""
    if not lam.contains(mu):
        return GammaElement.zero()
    if mu.is_empty():
        return ufac_Q(lam, a)
    beta = mu.parts + (0,) if (lam.length + mu.length) % 2 else mu.parts
    return _skew_block(lam.parts, beta, lambda r, s: ufac_Q_pair(r, s, a), lambda r, k: R_coeff(r, k, a))


def fac_tableau_sum(shape: SkewShiftedShape, n: int, a: FactorialParams) -> LaurentPoly:
    """全部 QTab 的阶乘权之和

    Raises:
        DomainError: a_0 != 0
    """
    if not len(a) or a[0]:
        raise DomainError("阶乘表描述要求 a_0 = 0")
    result = LaurentPoly.zero(n)
    for t in enumerate_tableaux(shape, n):
        result = result + fac_weight(t, n, a.values)
    return result


def check_rel_e(a: FactorialParams, r: int, i: int, j: int) -> bool:
    """sum_{k=j}^{r-i} e_{k-j}(a_0..a_{k-1}) e_{r-k-i}(a_{k+1}..a_{r-1}) == e_{r-i-j}(a_0..a_{r-1})"""
    a.require(r)
    values = a.values
    lhs = sum(
        (elementary(k - j, values[:k]) * elementary(r - k - i, values[k + 1 : r]) for k in range(j, r - i + 1)),
        Fraction(0),
    )
    rhs = elementary(r - i - j, values[:r])
    if lhs != rhs:
        logger.warning(f"e 恒等式不成立: r={r}, i={i}, j={j}, a={a}")
    return lhs == rhs


def _split(left: LaurentPoly, right: LaurentPoly) -> LaurentPoly:
    total = left.nvars + right.nvars
    return left.embed(total, 0) * right.embed(total, left.nvars)


def check_q_rg(r: int, n: int, a: FactorialParams) -> bool:
    """Q^C_{(r)}(x_1..x_n, y|a) == sum_k R_{r/k}(x|a) g̃_k(y|a)"""
    lhs = specialize(ufac_Q(StrictPartition.of((r,)), a), SpecializationContext(n + 1))
    ctx = SpecializationContext(n)
    rhs = LaurentPoly.zero(n + 1)
    for k in range(r + 1):
        rhs = rhs + _split(specialize(R_coeff(r, k, a), ctx), g_tilde_fac(k, a))
    if lhs != rhs:
        logger.warning(f"单行分裂恒等式不成立: r={r}, n={n}, a={a}")
    return lhs == rhs


def fac_separation_check(lam: StrictPartition, a: FactorialParams, n: int = 1, m: int = 1) -> bool:
    """Q^C_λ(x, y|a) == sum_μ Q^C_{λ/μ}(x|a) Q^C_μ(y|a)"""
    lhs = specialize(ufac_Q(lam, a), SpecializationContext(n + m))
    x_ctx, y_ctx = SpecializationContext(n), SpecializationContext(m)
    rhs = LaurentPoly.zero(n + m)
    for d in range(lam.weight + 1):
        for mu in strict_partitions_of(d):
            if lam.contains(mu):
                rhs = rhs + _split(specialize(ufac_Q_skew(lam, mu, a), x_ctx), specialize(ufac_Q(mu, a), y_ctx))
    if lhs != rhs:
        logger.warning(f"阶乘变量分离不成立: λ={lam}, a={a}, n={n}, m={m}")
    return lhs == rhs


def check_fg_by_g(d: int, a: FactorialParams) -> bool:
    """g̃_d(x|a) 的乘积定义与初等对称展开一致"""
    ok = g_tilde_fac(d, a) == g_tilde_fac_from_g(d, a)
    if not ok:
        logger.warning(f"g̃_{d}(x|a) 的两种算法不一致, a={a}")
    return ok


def fac_nimmo_eval(lam: StrictPartition, a: FactorialParams, pt: Sequence[Fraction]) -> Fraction:
    """阶乘 Nimmo 型表示在有理点处的值"""
    return nimmo_pfaffian(lam, pt, lambda d: g_tilde_fac(d, a))


def fac_weyl_eval(lam: Partition, a: FactorialParams, pt: Sequence[Fraction]) -> Fraction:
    """2^{l(λ)} 乘阶乘辛 Hall-Littlewood 函数在 t = -1 处的值"""
    value = weyl_hall_littlewood_oracle(lam, -1, pt, monomial=lambda y, r: factorial_monomial(y, a, r))
    return value * 2**lam.length
