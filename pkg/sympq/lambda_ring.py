"""对称函数环 Λ

以完全齐次对称函数 h_1, h_2, ... 为生成元. Schur 函数与万有辛 Schur 函数由行列式给出.
"""

import logging
from collections.abc import Callable, Mapping, Sequence
from fractions import Fraction
from typing import Any, ClassVar

from .exact_algebra import GradedPolynomial, Monomial, RingMatrix, TruncSeries, determinant, rational_inverse
from .exceptions import ConsistencyError
from .gamma_ring import GammaElement, usymp_P
from .partitions import Partition, StrictPartition, partitions_of
from .utils.cache import memoize
from .utils.common import format_coefficient, join_terms

logger = logging.getLogger("sympq.lambda_ring")


class LambdaElement(GradedPolynomial):
    """Λ 中的元素, 以 h 单项式为键"""

    __slots__ = ()

    generator_name: ClassVar[str] = "h"


def h(r: int) -> LambdaElement:
    """生成元 h_r, 约定 h_0 = 1, h_r = 0 (r < 0)"""
    return LambdaElement.generator(r)


@memoize
def elementary_in_h(p: int) -> LambdaElement:
    """e_p 用 h 表示, e_p = sum_{k=1}^{p} (-1)^{k-1} h_k e_{p-k}"""
    if p < 0:
        return LambdaElement.zero()
    if p == 0:
        return LambdaElement.one()
    result = LambdaElement.zero()
    for k in range(1, p + 1):
        term = h(k) * elementary_in_h(p - k)
        result = result + term if k % 2 else result - term
    return result


@memoize
def q_in_h(r: int) -> LambdaElement:
    """q_r = sum_{p=0}^{r} e_p h_{r-p}"""
    if r < 0:
        return LambdaElement.zero()
    result = LambdaElement.zero()
    for p in range(r + 1):
        result = result + elementary_in_h(p) * h(r - p)
    return result


@memoize
def _q_monomial_in_h(mono: Monomial) -> LambdaElement:
    if not mono:
        return LambdaElement.one()
    return q_in_h(mono[0]) * _q_monomial_in_h(mono[1:])


def gamma_to_lambda(e: GammaElement) -> LambdaElement:
    """环同态 Γ -> Λ"""
    result = LambdaElement.zero()
    for mono, coeff in e.terms.items():
        result = result + _q_monomial_in_h(mono).scale(coeff)
    return result


@memoize
def schur_s(mu: Partition) -> LambdaElement:
    """Schur 函数 s_μ = det(h_{μ_i - i + j}) (Jacobi-Trudi)"""
    ell = mu.length
    if not ell:
        return LambdaElement.one()
    return determinant(
        RingMatrix.from_function(ell, ell, lambda i, j: h(mu.parts[i] - i + j), LambdaElement.one()),
    )


@memoize
def usymp_schur(lam: Partition) -> LambdaElement:
    """万有辛 Schur 函数 s^C_λ = 1/2 det(h_{λ_i-i+j} + h_{λ_i-i-j+2})"""
    ell = lam.length
    if not ell:
        return LambdaElement.one()

    # 第一列两项相同, 直接约去系数 1/2
    def entry(i: int, j: int) -> LambdaElement:
        d = lam.parts[i] - i
        if j == 0:
            return h(d)
        return h(d + j) + h(d - j)

    return determinant(RingMatrix.from_function(ell, ell, entry, LambdaElement.one()))


_SchurSystem = tuple[tuple[Partition, ...], tuple[Monomial, ...], tuple[tuple[Fraction, ...], ...]]


@memoize
def _schur_h_inverse(degree: int) -> _SchurSystem:
    shapes = tuple(partitions_of(degree))
    coords = tuple(mu.parts for mu in shapes)
    rows = [[schur_s(mu).coefficient(mono) for mono in coords] for mu in shapes]
    logger.debug(f"构造 {degree} 次 Schur 基变换矩阵, 阶数 {len(shapes)}")
    inverse = rational_inverse(rows)
    return shapes, coords, tuple(tuple(row) for row in inverse)


def _peel(e: LambdaElement, basis: Callable[[Partition], LambdaElement]) -> dict[Partition, Fraction]:
    """逐次消去最高次部分, 基元素的最高次部分须为 s_μ"""
    residual = e
    coeffs: dict[Partition, Fraction] = {}
    while residual:
        degree = residual.degree()
        shapes, coords, inverse = _schur_h_inverse(degree)
        vector = [residual.coefficient(mono) for mono in coords]
        step = LambdaElement.zero()
        for col, mu in enumerate(shapes):
            value = sum((vector[k] * inverse[k][col] for k in range(len(coords))), Fraction(0))
            if value:
                coeffs[mu] = coeffs.get(mu, Fraction(0)) + value
                step = step + basis(mu).scale(value)
        residual = residual - step
        if residual and residual.degree() >= degree:
            raise ConsistencyError(f"Λ 中 {degree} 次部分未能消去")
    return coeffs


def expand_in_schur(e: LambdaElement) -> dict[Partition, Fraction]:
    """Schur 基展开"""
    return _peel(e, schur_s)


def expand_in_usymp_schur(e: LambdaElement) -> dict[Partition, Fraction]:
    """万有辛 Schur 基展开"""
    return _peel(e, usymp_schur)


def g_tilde_coefficients(lam: StrictPartition) -> dict[Partition, Fraction]:
    """万有辛 P 函数在万有辛 Schur 基下的系数 g̃_{λ,μ}"""
    return expand_in_usymp_schur(gamma_to_lambda(usymp_P(lam)))


def hook_coefficient(r: int, mu: Partition) -> int:
    """单行情形 g̃_{(r),μ} 的闭式

    Args:
        r: 单行长度, r >= 1
        mu: 普通分拆

    Returns:
        钩形且 |μ| = r 时为 1; 钩形且 1 <= |μ| <= r-1, |μ| ≡ r (mod 2) 时为 2;
        μ 为空且 r 为偶数时为 1; 其余为 0
    """
    size = mu.weight
    if mu.is_empty():
        return 1 if r % 2 == 0 else 0
    if not mu.is_hook():
        return 0
    if size == r:
        return 1
    if 1 <= size <= r - 1 and (r - size) % 2 == 0:
        return 2
    return 0


def complete_homogeneous_series(alphabet: Sequence[Any], order: int, one: Any = 1) -> TruncSeries:
    """字母表上 h_k 的生成函数 prod 1/(1 - a z), 截断到 z^order"""
    series = TruncSeries.constant(one, order)
    for a in alphabet:
        series = series * TruncSeries.geometric(a, order, one)
    return series


def evaluate_lambda(e: LambdaElement, alphabet: Sequence[Any], one: Any = 1) -> Any:
    """在有限字母表上求值 (h_k 取字母表的完全齐次对称多项式)"""
    degree = max((max(mono, default=0) for mono in e.terms), default=0)
    hs = complete_homogeneous_series(alphabet, degree, one)
    result = one * 0
    for mono, coeff in e.terms.items():
        term = one * coeff
        for k in mono:
            term = term * hs.coeff(k)
        result = result + term
    return result


def bialternant_schur(mu: Partition, point: Sequence[Fraction]) -> Fraction:
    """有限变量 Schur 多项式的双交错式 det(x_i^{μ_j+n-j}) / det(x_i^{n-j})"""
    n = len(point)
    parts = mu.padded(n)
    values = [Fraction(x) for x in point]
    num = determinant(RingMatrix.from_function(n, n, lambda i, j: values[i] ** (parts[j] + n - 1 - j)))
    den = determinant(RingMatrix.from_function(n, n, lambda i, j: values[i] ** (n - 1 - j)))
    return num / den


def expansion_text(coeffs: Mapping[Partition, Fraction], name: str) -> str:
    """展开式的文本形式, 大小降序, 同大小按字典序降序"""
    items = sorted(coeffs.items(), key=lambda item: (item[0].weight, item[0].parts), reverse=True)
    return join_terms(format_coefficient(c, f"{name}[{mu}]" if mu.parts else "") for mu, c in items if c)
