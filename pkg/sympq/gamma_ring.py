"""环 Γ 与 Schur Q 函数、万有辛 Q 函数

Γ 由 q_1, q_2, ... 生成, 偶数下标的生成元可由奇数下标的生成元表出.
元素保留构造时的 q 单项式, 相等判定与基展开在只含奇数下标的约化形式上进行.
"""

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import ClassVar

from .exact_algebra import GradedPolynomial, Monomial, RingMatrix, multiply_terms, pfaffian, rational_inverse
from .exceptions import ConsistencyError
from .partitions import StrictPartition, odd_partitions_of, strict_partitions_of
from .utils.cache import memoize
from .utils.common import format_coefficient, join_terms, rational_json

logger = logging.getLogger("sympq.gamma_ring")


@memoize
def _reduce_generator(k: int) -> Mapping[Monomial, Fraction]:
    if k % 2:
        return {(k,): Fraction(1)}
    # q_{2m} = -1/2 * sum_{i=1}^{2m-1} (-1)^i q_i q_{2m-i}
    out: dict[Monomial, Fraction] = {}
    for i in range(1, k):
        sign = Fraction(1, 2) if i % 2 else Fraction(-1, 2)
        for mono, coeff in multiply_terms(_reduce_generator(i), _reduce_generator(k - i)).items():
            out[mono] = out.get(mono, 0) + sign * coeff
    return {m: c for m, c in out.items() if c}


@memoize
def _reduce_monomial(mono: Monomial) -> Mapping[Monomial, Fraction]:
    if not mono:
        return {(): Fraction(1)}
    return multiply_terms(_reduce_generator(mono[0]), _reduce_monomial(mono[1:]))


class GammaElement(GradedPolynomial):
    """Γ 中的元素, 以 q 单项式为键"""

    __slots__ = ("_reduced",)

    generator_name: ClassVar[str] = "q"

    def reduced(self) -> Mapping[Monomial, Fraction]:
        """只含奇数下标生成元的约化形式"""
        try:
            return self._reduced
        except AttributeError:
            pass
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            for rmono, rcoeff in _reduce_monomial(mono).items():
                out[rmono] = out.get(rmono, 0) + coeff * rcoeff
        self._reduced = {m: c for m, c in out.items() if c}
        return self._reduced

    def reduced_element(self) -> "GammaElement":
        """约化形式对应的元素"""
        return GammaElement._raw(dict(self.reduced()))

    def _canonical(self) -> Mapping[Monomial, Fraction]:
        return self.reduced()


def q(r: int) -> GammaElement:
    """生成元 q_r, 约定 q_0 = 1, q_r = 0 (r < 0)"""
    return GammaElement.generator(r)


def schur_Q_pair(r: int, s: int) -> GammaElement:
    """Q_{(r,s)}, 按 Q_{(s,r)} = -Q_{(r,s)}, Q_{(r,0)} = q_r 延拓到全部整数对"""
    if r == s:
        return GammaElement.zero()
    if r < s:
        return -schur_Q_pair(s, r)
    if s < 0:
        return GammaElement.zero()
    result = q(r) * q(s)
    for k in range(1, s + 1):
        term = q(r + k) * q(s - k)
        result = result + (term * 2 if k % 2 == 0 else term * -2)
    return result


def usymp_Q_pair(r: int, s: int) -> GammaElement:
    """万有辛 Q^C_{(r,s)}, 约定同 `schur_Q_pair`"""
    if r == s:
        return GammaElement.zero()
    if r < s:
        return -usymp_Q_pair(s, r)
    if s < 0:
        return GammaElement.zero()
    result = q(r) * q(s)
    for k in range(1, s + 1):
        inner = q(r + k) + q(r - k)
        for i in range(1, k):
            inner = inner + q(r + k - 2 * i) * 2
        term = inner * q(s - k)
        result = result + (term * 2 if k % 2 == 0 else term * -2)
    return result


def _pair_pfaffian(lam: StrictPartition, pair: Callable[[int, int], GammaElement]) -> GammaElement:
    parts = lam.parts + (0,) if lam.length % 2 else lam.parts
    m = len(parts)
    if m == 0:
        return GammaElement.one()
    if m == 2:
        return pair(parts[0], parts[1])
    pairs = {(i, j): pair(parts[i], parts[j]) for i in range(m) for j in range(i + 1, m)}
    zero = GammaElement.zero()

    def entry(i: int, j: int) -> GammaElement:
        if i < j:
            return pairs[i, j]
        if i > j:
            return -pairs[j, i]
        return zero

    return pfaffian(RingMatrix.from_function(m, m, entry, GammaElement.one()))


@memoize
def schur_Q(lam: StrictPartition) -> GammaElement:
    """Schur Q 函数 Q_λ (Pfaffian 形式)"""
    return _pair_pfaffian(lam, schur_Q_pair)


def schur_P(lam: StrictPartition) -> GammaElement:
    """Schur P 函数 P_λ = 2^{-l(λ)} Q_λ"""
    return schur_Q(lam).scale(Fraction(1, 2**lam.length))


@memoize
def usymp_Q(lam: StrictPartition) -> GammaElement:
    """万有辛 Q 函数"""
    return _pair_pfaffian(lam, usymp_Q_pair)


def usymp_P(lam: StrictPartition) -> GammaElement:
    """万有辛 P 函数 = 2^{-l(λ)} 乘万有辛 Q 函数"""
    return usymp_Q(lam).scale(Fraction(1, 2**lam.length))


@memoize
def usymp_Q_skew(lam: StrictPartition, mu: StrictPartition) -> GammaElement:
    """斜万有辛 Q 函数, λ ⊉ μ 时为 0

    l(λ)+l(μ) 为奇数时在 μ 末尾补 0 后取分块矩阵 (K, M; -M^T, O) 的 Pfaffian.
    """
    if not lam.contains(mu):
        return GammaElement.zero()
    if mu.is_empty():
        return usymp_Q(lam)
    beta = mu.parts + (0,) if (lam.length + mu.length) % 2 else mu.parts
    ell, s = lam.length, len(beta)
    parts = lam.parts
    zero = GammaElement.zero()
    pairs = {(i, j): usymp_Q_pair(parts[i], parts[j]) for i in range(ell) for j in range(i + 1, ell)}

    def entry(i: int, j: int) -> GammaElement:
        if i < ell and j < ell:
            if i == j:
                return zero
            return pairs[i, j] if i < j else -pairs[j, i]
        if i < ell:
            return q(parts[i] - beta[s - 1 - (j - ell)])
        if j < ell:
            return -q(parts[j] - beta[s - 1 - (i - ell)])
        return zero

    return pfaffian(RingMatrix.from_function(ell + s, ell + s, entry, GammaElement.one()))


def usymp_P_skew(lam: StrictPartition, mu: StrictPartition) -> GammaElement:
    """斜万有辛 P 函数 = 2^{l(μ)-l(λ)} 乘斜 Q 函数"""
    return usymp_Q_skew(lam, mu).scale(Fraction(2) ** (mu.length - lam.length))


class BasisTag(str, Enum):
    """Γ 的四组基"""

    SchurQ = "Q"
    SchurP = "P"
    SympQ = "QC"
    SympP = "PC"

    @property
    def is_p_type(self) -> bool:
        """是否为 P 型 (Q 型乘 2^{-l})"""
        return self in (BasisTag.SchurP, BasisTag.SympP)

    @property
    def is_symplectic(self) -> bool:
        """是否为万有辛基"""
        return self in (BasisTag.SympQ, BasisTag.SympP)


_BASIS_BUILDERS: dict[BasisTag, Callable[[StrictPartition], GammaElement]] = {
    BasisTag.SchurQ: schur_Q,
    BasisTag.SchurP: schur_P,
    BasisTag.SympQ: usymp_Q,
    BasisTag.SympP: usymp_P,
}


def basis_element(lam: StrictPartition, basis: BasisTag) -> GammaElement:
    """给定基中 λ 对应的元素"""
    return _BASIS_BUILDERS[basis](lam)


@dataclass(frozen=True)
class BasisExpansion:
    """Γ 元素在某组基下的展开

    Attributes:
        basis: 基
        coeffs: 严格分拆 -> 非零有理系数
    """

    basis: BasisTag
    coeffs: dict[StrictPartition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", {lam: Fraction(c) for lam, c in self.coeffs.items() if c})

    def coefficient(self, lam: StrictPartition) -> Fraction:
        """λ 的系数"""
        return self.coeffs.get(lam, Fraction(0))

    def sorted_items(self) -> list[tuple[StrictPartition, Fraction]]:
        """大小降序, 同大小按字典序降序"""
        return sorted(self.coeffs.items(), key=lambda item: (item[0].weight, item[0].parts), reverse=True)

    def to_element(self) -> GammaElement:
        """还原为 Γ 中的元素"""
        return from_basis(self)

    def __str__(self) -> str:
        name = self.basis.value
        return join_terms(
            format_coefficient(coeff, "" if lam.is_empty() else f"{name}[{lam}]") for lam, coeff in self.sorted_items()
        )

    def to_json(self, obj: str) -> dict:
        """JSON 形式"""
        return {
            "object": obj,
            "basis": self.basis.value,
            "coeffs": [{"partition": list(lam.parts), **rational_json(c)} for lam, c in self.sorted_items()],
        }


@memoize
def _odd_coordinates(degree: int) -> tuple[Monomial, ...]:
    return tuple(lam.parts for lam in odd_partitions_of(degree))


@memoize
def _schur_q_inverse(degree: int) -> tuple[tuple[StrictPartition, ...], tuple[tuple[Fraction, ...], ...]]:
    """d 次 Schur Q 函数在奇数单项式坐标下的矩阵之逆"""
    shapes = tuple(strict_partitions_of(degree))
    coords = _odd_coordinates(degree)
    rows = []
    for lam in shapes:
        reduced = schur_Q(lam).reduced()
        rows.append([reduced.get(mono, Fraction(0)) for mono in coords])
    logger.debug(f"构造 {degree} 次基变换矩阵, 阶数 {len(shapes)}")
    inverse = rational_inverse(rows)
    return shapes, tuple(tuple(row) for row in inverse)


def to_basis(e: GammaElement, basis: BasisTag) -> BasisExpansion:
    """把 Γ 中的元素展开到给定基

    逐次消去最高次部分: 最高次部分先在 Schur Q 基下求解, 再减去对应基元素.

    Raises:
        ConsistencyError: 某一次数的首项未能消去
    """
    residual = e.reduced_element()
    coeffs: dict[StrictPartition, Fraction] = {}
    while residual:
        degree = residual.degree()
        top = residual.reduced()
        coords = _odd_coordinates(degree)
        vector = [top.get(mono, Fraction(0)) for mono in coords]
        shapes, inverse = _schur_q_inverse(degree)
        step = GammaElement.zero()
        for col, lam in enumerate(shapes):
            value = sum((vector[k] * inverse[k][col] for k in range(len(coords))), Fraction(0))
            if not value:
                continue
            if basis.is_p_type:
                value *= 2**lam.length
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + value
            step = step + basis_element(lam, basis).scale(value)
        residual = (residual - step).reduced_element()
        if residual and residual.degree() >= degree:
            raise ConsistencyError(f"{degree} 次部分未能消去")
    return BasisExpansion(basis, coeffs)


def from_basis(expansion: BasisExpansion) -> GammaElement:
    """由基展开还原 Γ 中的元素"""
    result = GammaElement.zero()
    for lam, coeff in expansion.coeffs.items():
        result = result + basis_element(lam, expansion.basis).scale(coeff)
    return result


def structure_constants(mu: StrictPartition, nu: StrictPartition) -> BasisExpansion:
    """万有辛 P 函数乘积的结构常数 f̃^λ_{μ,ν}"""
    return to_basis(usymp_P(mu) * usymp_P(nu), BasisTag.SympP)


def coproduct_constants(lam: StrictPartition, mu: StrictPartition) -> BasisExpansion:
    """斜万有辛 Q 函数在万有辛 Q 基下的系数 d̃^λ_{μ,ν}"""
    return to_basis(usymp_Q_skew(lam, mu), BasisTag.SympQ)


def schurP_in_sympP(lam: StrictPartition) -> BasisExpansion:
    """P_λ 在万有辛 P 基下的系数 b_{λ,μ}"""
    return to_basis(schur_P(lam), BasisTag.SympP)


def sympQ_in_schurQ(lam: StrictPartition) -> BasisExpansion:
    """万有辛 Q 函数在 Schur Q 基下的展开"""
    return to_basis(usymp_Q(lam), BasisTag.SchurQ)


def sympP_in_schurP(lam: StrictPartition) -> BasisExpansion:
    """万有辛 P 函数在 Schur P 基下的展开"""
    return to_basis(usymp_P(lam), BasisTag.SchurP)
