"""精确代数运算

有理数统一使用 `fractions.Fraction`; 有理矩阵的行列式与逆矩阵交给 sympy 的 `DomainMatrix`,
一般交换环上的行列式与 Pfaffian 使用无除法的展开.
"""

import logging
import sys
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Any, ClassVar

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

from .exceptions import ConsistencyError, DivisibilityError, PoleError, StructuralError
from .utils.common import format_coefficient, join_terms

logger = logging.getLogger("sympq.exact_algebra")

Rational = Fraction
Exponent = tuple[int, ...]
Scalar = int | Fraction


def _is_scalar(value: object) -> bool:
    return isinstance(value, int | Fraction) and not isinstance(value, bool)


class LaurentPoly:
    """有理系数的稀疏多元 Laurent 多项式

    Attributes:
        nvars: 变量个数, 变量记为 x1..xn
        terms: 指数向量 -> 非零系数
    """

    __slots__ = ("_hash", "_terms", "nvars")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Scalar] | None = None) -> None:
        clean: dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            key = tuple(exp)
            if len(key) != nvars:
                raise StructuralError(f"指数向量长度 {len(key)} 与变量个数 {nvars} 不一致")
            value = clean.get(key, Fraction(0)) + Fraction(coeff)
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self.nvars = nvars
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Fraction]) -> Self:
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> Self:
        """零多项式"""
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Scalar = 1) -> Self:
        """常数多项式"""
        value = Fraction(value)
        return cls._raw(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def one(cls, nvars: int) -> Self:
        """常数 1"""
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: Scalar = 1) -> Self:
        """单项式 coeff * x^exponents"""
        coeff = Fraction(coeff)
        return cls._raw(len(exponents), {tuple(exponents): coeff} if coeff else {})

    @classmethod
    def variable(cls, nvars: int, index: int, power: int = 1) -> Self:
        """第 index 个变量 (从 0 开始) 的 power 次幂"""
        exp = [0] * nvars
        exp[index] = power
        return cls.monomial(exp)

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        """只读的项字典"""
        return self._terms

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """按指数字典序降序排列的项"""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        """是否为零"""
        return not self._terms

    def is_constant(self) -> bool:
        """是否为常数"""
        return all(not any(exp) for exp in self._terms)

    def constant_term(self) -> Fraction:
        """常数项"""
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def _coerce(self, other: object) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise StructuralError(f"变量个数不一致: {self.nvars} != {other.nvars}")
            return other
        if _is_scalar(other):
            return LaurentPoly.constant(self.nvars, other)  # type: ignore[arg-type]
        return None

    def __add__(self, other: object) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in rhs._terms.items():
            value = out.get(exp, 0) + coeff
            if value:
                out[exp] = value
            else:
                out.pop(exp, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.nvars, {exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other: object) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "LaurentPoly":
        return (-self) + other

    def scale(self, factor: Scalar) -> "LaurentPoly":
        """乘以标量"""
        factor = Fraction(factor)
        if not factor:
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly._raw(self.nvars, {exp: c * factor for exp, c in self._terms.items()})

    def __mul__(self, other: object) -> "LaurentPoly":
        if _is_scalar(other):
            return self.scale(other)  # type: ignore[arg-type]
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in rhs._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return LaurentPoly._raw(self.nvars, {exp: c for exp, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            if len(self._terms) != 1:
                raise DivisibilityError("只有单项式可以取负次幂")
            ((exp, coeff),) = self._terms.items()
            return LaurentPoly.monomial([e * power for e in exp], coeff**power)
        result = LaurentPoly.one(self.nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if _is_scalar(other):
            return self._terms == LaurentPoly.constant(self.nvars, other)._terms  # type: ignore[arg-type]
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """在有理点处精确求值

        Raises:
            PoleError: 变量取 0 且出现负指数
        """
        if len(point) != self.nvars:
            raise StructuralError(f"求值点维数 {len(point)} 与变量个数 {self.nvars} 不一致")
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for exp, coeff in self._terms.items():
            term = coeff
            for value, e in zip(values, exp):
                if e < 0 and not value:
                    raise PoleError("Laurent 多项式在 0 处求负次幂")
                if e:
                    term *= value**e
            total += term
        return total

    def substitute(self, values: Mapping[int, Scalar]) -> "LaurentPoly":
        """把部分变量替换为有理数, 变量个数不变 (被替换的指数置 0)"""
        out: dict[Exponent, Fraction] = {}
        for exp, coeff in self._terms.items():
            new_exp = list(exp)
            for index, value in values.items():
                e = exp[index]
                if e:
                    if e < 0 and not value:
                        raise PoleError(f"x{index + 1} 取 0 时出现负次幂")
                    coeff = coeff * Fraction(value) ** e
                new_exp[index] = 0
            key = tuple(new_exp)
            out[key] = out.get(key, 0) + coeff
        return LaurentPoly._raw(self.nvars, {exp: c for exp, c in out.items() if c})

    def embed(self, nvars: int, offset: int = 0) -> "LaurentPoly":
        """嵌入到 nvars 个变量中, 原变量 i 变为 offset+i"""
        if offset + self.nvars > nvars:
            raise StructuralError("嵌入目标的变量个数不足")
        pad_left = (0,) * offset
        pad_right = (0,) * (nvars - offset - self.nvars)
        return LaurentPoly._raw(nvars, {pad_left + exp + pad_right: c for exp, c in self._terms.items()})

    def permute(self, perm: Sequence[int]) -> "LaurentPoly":
        """变量置换: 原变量 i 变为 perm[i]"""
        out: dict[Exponent, Fraction] = {}
        for exp, coeff in self._terms.items():
            new_exp = [0] * self.nvars
            for i, e in enumerate(exp):
                new_exp[perm[i]] = e
            out[tuple(new_exp)] = coeff
        return LaurentPoly._raw(self.nvars, out)

    def invert(self, index: int) -> "LaurentPoly":
        """替换 x_index -> x_index^-1"""
        out = {}
        for exp, coeff in self._terms.items():
            new_exp = list(exp)
            new_exp[index] = -new_exp[index]
            out[tuple(new_exp)] = coeff
        return LaurentPoly._raw(self.nvars, out)

    def leading_term(self, key: Callable[[Exponent], Any] | None = None) -> tuple[Exponent, Fraction]:
        """按给定单项式序取首项, 默认字典序"""
        if not self._terms:
            raise DivisibilityError("零多项式没有首项")
        exp = max(self._terms, key=key) if key else max(self._terms)
        return exp, self._terms[exp]

    def degree_bounds(self, index: int) -> tuple[int, int]:
        """变量 index 的 (最低次, 最高次)"""
        degrees = [exp[index] for exp in self._terms]
        return min(degrees), max(degrees)

    def __str__(self) -> str:
        rendered = []
        for exp, coeff in self.sorted_terms():
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e:
                    factors.append(f"x{i + 1}^{e}")
            rendered.append(format_coefficient(coeff, "*".join(factors)))
        return join_terms(rendered)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {self})"


def exact_divide(num: LaurentPoly, den: LaurentPoly, pivot_var: int) -> LaurentPoly:
    """Laurent 多项式的精确除法

    使用 pivot_var 优先的字典序逐项消去首项.

    Args:
        num: 被除式
        den: 除式
        pivot_var: 主变量下标

    Returns:
        商 q, 满足 q * den == num

    Raises:
        DivisibilityError: 不能整除
    """
    if den.is_zero():
        raise DivisibilityError("除式为零")
    if num.nvars != den.nvars:
        raise StructuralError("被除式与除式的变量个数不一致")
    nvars = num.nvars
    if num.is_zero():
        return LaurentPoly.zero(nvars)

    def key(exp: Exponent) -> Exponent:
        return (exp[pivot_var], *exp[:pivot_var], *exp[pivot_var + 1 :])

    # 商在每个变量上的次数范围由首末次数之差确定
    bounds = []
    for i in range(nvars):
        nlo, nhi = num.degree_bounds(i)
        dlo, dhi = den.degree_bounds(i)
        bounds.append((nlo - dlo, nhi - dhi))
    lead_exp, lead_coeff = den.leading_term(key)
    quotient: dict[Exponent, Fraction] = {}
    remainder = num
    while remainder:
        exp, coeff = remainder.leading_term(key)
        q_exp = tuple(a - b for a, b in zip(exp, lead_exp))
        if any(not lo <= e <= hi for e, (lo, hi) in zip(q_exp, bounds)):
            raise DivisibilityError(f"精确除法失败, 残余首项指数 {exp}")
        q_coeff = coeff / lead_coeff
        quotient[q_exp] = q_coeff
        remainder = remainder - den * LaurentPoly.monomial(q_exp, q_coeff)
    return LaurentPoly._raw(nvars, quotient)


@dataclass(frozen=True)
class TruncSeries:
    """截断到 z^K 的形式幂级数, 系数可以取自任意交换环

    Attributes:
        coefficients: 长度为 K+1 的系数元组
    """

    coefficients: tuple[Any, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise StructuralError("截断级数至少需要常数项")
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @classmethod
    def zeros(cls, order: int, zero: Any = 0) -> Self:
        """零级数"""
        return cls((zero,) * (order + 1))

    @classmethod
    def constant(cls, value: Any, order: int) -> Self:
        """常数级数"""
        zero = value * 0
        return cls((value,) + (zero,) * order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: Any = 1) -> Self:
        """coeff * z^power"""
        zero = coeff * 0
        return cls(tuple(coeff if k == power else zero for k in range(order + 1)))

    @classmethod
    def geometric(cls, a: Any, order: int, one: Any = 1) -> Self:
        """1/(1 - a z) = 1 + a z + a^2 z^2 + ..."""
        coeffs = [one]
        for _ in range(order):
            coeffs.append(coeffs[-1] * a)
        return cls(tuple(coeffs))

    @property
    def order(self) -> int:
        """截断阶 K"""
        return len(self.coefficients) - 1

    def coeff(self, k: int) -> Any:
        """z^k 的系数"""
        if k < 0:
            return self.coefficients[0] * 0
        if k > self.order:
            raise StructuralError(f"z^{k} 超出截断阶 {self.order}")
        return self.coefficients[k]

    def truncate(self, order: int) -> "TruncSeries":
        """截断到更低的阶"""
        return TruncSeries(self.coefficients[: order + 1])

    def _pair(self, other: "TruncSeries") -> tuple[tuple[Any, ...], tuple[Any, ...]]:
        k = min(self.order, other.order)
        return self.coefficients[: k + 1], other.coefficients[: k + 1]

    def __add__(self, other: object) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            a, b = self._pair(other)
            return TruncSeries(tuple(x + y for x, y in zip(a, b)))
        return TruncSeries((self.coefficients[0] + other, *self.coefficients[1:]))

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: object) -> "TruncSeries":
        return self + (-other)  # type: ignore[operator]

    def __rsub__(self, other: object) -> "TruncSeries":
        return (-self) + other

    def __mul__(self, other: object) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries(tuple(c * other for c in self.coefficients))
        a, b = self._pair(other)
        zero = a[0] * 0
        out = []
        for k in range(len(a)):
            total = zero
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    total = total + a[i] * b[k - i]
            out.append(total)
        return TruncSeries(tuple(out))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.coefficients)

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            body = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if _is_scalar(c):
                parts.append(format_coefficient(Fraction(c), body))
            else:
                parts.append(f"({c})*{body}" if body else f"({c})")
        return join_terms(parts) + f" + O(z^{self.order + 1})"


@dataclass(frozen=True)
class RingMatrix:
    """交换环上的稠密矩阵

    Attributes:
        entries: 行元组组成的元组
        one: 环的单位元, 零元取 `one * 0`
    """

    entries: tuple[tuple[Any, ...], ...]
    one: Any = 1

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.entries)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise StructuralError("矩阵的行长度不一致")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_function(cls, rows: int, cols: int, func: Callable[[int, int], Any], one: Any = 1) -> Self:
        """由 func(i, j) 生成矩阵 (下标从 0 开始)"""
        return cls(tuple(tuple(func(i, j) for j in range(cols)) for i in range(rows)), one)

    @classmethod
    def skew_block(cls, z: "RingMatrix", w: "RingMatrix") -> Self:
        """分块矩阵 (Z, W; -W^T, O)"""
        n, m = z.rows, w.cols
        if z.cols != n or (w.rows != n and m):
            raise StructuralError("分块矩阵形状不匹配")
        zero = z.zero if n else w.zero

        def entry(i: int, j: int) -> Any:
            if i < n and j < n:
                return z.entries[i][j]
            if i < n:
                return w.entries[i][j - n]
            if j < n:
                return -w.entries[j][i - n]
            return zero

        return cls.from_function(n + m, n + m, entry, z.one)

    @property
    def rows(self) -> int:
        """行数"""
        return len(self.entries)

    @property
    def cols(self) -> int:
        """列数"""
        return len(self.entries[0]) if self.entries else 0

    @property
    def zero(self) -> Any:
        """环的零元"""
        return self.one * 0

    def __getitem__(self, index: tuple[int, int]) -> Any:
        i, j = index
        return self.entries[i][j]

    def is_square(self) -> bool:
        """是否为方阵"""
        return self.rows == self.cols or (not self.entries)

    def is_skew_symmetric(self) -> bool:
        """是否反对称 (对角线为零)"""
        if not self.is_square():
            return False
        n = self.rows
        for i in range(n):
            if self.entries[i][i]:
                return False
            for j in range(i + 1, n):
                if self.entries[i][j] != -self.entries[j][i]:
                    return False
        return True

    def transpose(self) -> "RingMatrix":
        """转置"""
        return RingMatrix(tuple(zip(*self.entries)), self.one)

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.cols != other.rows:
            raise StructuralError("矩阵乘法形状不匹配")
        zero = self.zero

        def entry(i: int, j: int) -> Any:
            total = zero
            for k in range(self.cols):
                total = total + self.entries[i][k] * other.entries[k][j]
            return total

        return RingMatrix.from_function(self.rows, other.cols, entry, self.one)

    def map(self, func: Callable[[Any], Any], one: Any | None = None) -> "RingMatrix":
        """逐元素变换"""
        return RingMatrix(tuple(tuple(func(e) for e in row) for row in self.entries), func(self.one) if one is None else one)

    def is_rational(self) -> bool:
        """元素是否全为有理数"""
        return all(_is_scalar(e) for row in self.entries for e in row)


def _bits(mask: int) -> Iterator[int]:
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def pfaffian(m: RingMatrix) -> Any:
    """Pfaffian, 沿第一行递归展开并按剩余下标集合记忆化, 不做除法

    Raises:
        StructuralError: 阶数为奇数或矩阵不反对称
    """
    if not m.is_square() or m.rows % 2:
        raise StructuralError(f"Pfaffian 需要偶数阶方阵, 实际为 {m.rows}x{m.cols}")
    if not m.is_skew_symmetric():
        raise StructuralError("Pfaffian 需要反对称矩阵")
    entries = m.entries
    one, zero = m.one, m.zero

    @lru_cache(maxsize=None)
    def pf(mask: int) -> Any:
        if not mask:
            return one
        first = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << first)
        total = zero
        sign = 1
        for j in _bits(rest):
            a = entries[first][j]
            if a:
                sub = pf(rest & ~(1 << j))
                if sub:
                    term = a * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return pf((1 << m.rows) - 1)


def determinant(m: RingMatrix) -> Any:
    """行列式

    全部元素为有理数时走 sympy 的 `DomainMatrix`, 否则按列子集记忆化的 Laplace 展开.

    Raises:
        StructuralError: 非方阵
    """
    if not m.is_square():
        raise StructuralError(f"行列式需要方阵, 实际为 {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return m.one
    if m.is_rational():
        return rational_determinant(m.entries)
    entries = m.entries
    one, zero = m.one, m.zero

    @lru_cache(maxsize=None)
    def det(row: int, mask: int) -> Any:
        if row == n:
            return one
        total = zero
        sign = 1
        for col in _bits(mask):
            a = entries[row][col]
            if a:
                sub = det(row + 1, mask & ~(1 << col))
                if sub:
                    term = a * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return det(0, (1 << n) - 1)


def _domain_matrix(rows: Sequence[Sequence[Scalar]]) -> DomainMatrix:
    data = [[(Fraction(e).numerator, Fraction(e).denominator) for e in row] for row in rows]
    return DomainMatrix.from_list(data, QQ)


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def rational_determinant(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    """有理矩阵的行列式"""
    if not rows:
        return Fraction(1)
    return _to_fraction(_domain_matrix(rows).det())


def rational_inverse(rows: Sequence[Sequence[Scalar]]) -> list[list[Fraction]]:
    """有理矩阵的逆

    Raises:
        ConsistencyError: 矩阵奇异
    """
    if not rows:
        return []
    matrix = _domain_matrix(rows)
    if not matrix.det():
        raise ConsistencyError(f"{len(rows)} 阶有理矩阵奇异")
    return [[_to_fraction(e) for e in row] for row in matrix.inv().to_list()]


def permutation_determinant(m: RingMatrix) -> Any:
    """按置换展开的行列式, 仅用于对拍"""
    n = m.rows
    total = m.zero
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = m.one
        for i, j in enumerate(perm):
            term = term * m.entries[i][j]
        total = total - term if inversions % 2 else total + term
    return total


Monomial = tuple[int, ...]


def _normalize_monomial(indices: Iterable[int]) -> Monomial:
    mono = tuple(sorted((i for i in indices if i), reverse=True))
    if mono and mono[-1] < 0:
        raise StructuralError(f"生成元下标不能为负: {mono}")
    return mono


def multiply_terms(a: Mapping[Monomial, Fraction], b: Mapping[Monomial, Fraction]) -> dict[Monomial, Fraction]:
    """两个生成元单项式字典相乘"""
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            mono = tuple(sorted(m1 + m2, reverse=True))
            out[mono] = out.get(mono, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


class GradedPolynomial:
    """以生成元单项式为键的稀疏多项式

    单项式记为生成元下标的降序元组 (即一个分拆), 次数为下标之和.
    子类通过 `generator_name` 指定打印名, 可覆盖 `_canonical` 改变相等判定.
    """

    __slots__ = ("_hash", "_terms")

    generator_name: ClassVar[str] = "g"

    def __init__(self, terms: Mapping[Iterable[int], Scalar] | None = None) -> None:
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            key = _normalize_monomial(mono)
            value = clean.get(key, Fraction(0)) + Fraction(coeff)
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> Self:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> Self:
        """零元"""
        return cls._raw({})

    @classmethod
    def constant(cls, value: Scalar = 1) -> Self:
        """常数"""
        value = Fraction(value)
        return cls._raw({(): value} if value else {})

    @classmethod
    def one(cls) -> Self:
        """单位元"""
        return cls.constant(1)

    @classmethod
    def generator(cls, k: int) -> Self:
        """第 k 个生成元; 约定 k=0 为 1, k<0 为 0"""
        if k < 0:
            return cls.zero()
        if k == 0:
            return cls.one()
        return cls._raw({(k,): Fraction(1)})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        """只读的项字典"""
        return self._terms

    def _canonical(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def degrees(self) -> set[int]:
        """出现的次数集合"""
        return {sum(mono) for mono in self._canonical()}

    def degree(self) -> int:
        """最高次数, 零元为 -1"""
        return max(self.degrees(), default=-1)

    def homogeneous_part(self, degree: int) -> Self:
        """指定次数的齐次部分"""
        return type(self)._raw({m: c for m, c in self._terms.items() if sum(m) == degree})

    def coefficient(self, mono: Iterable[int]) -> Fraction:
        """单项式系数"""
        return self._terms.get(_normalize_monomial(mono), Fraction(0))

    def _coerce(self, other: object) -> Self | None:
        if isinstance(other, type(self)):
            return other
        if _is_scalar(other):
            return type(self).constant(other)  # type: ignore[arg-type]
        return None

    def __add__(self, other: object) -> Self:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            value = out.get(mono, 0) + coeff
            if value:
                out[mono] = value
            else:
                out.pop(mono, None)
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Self:
        return type(self)._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> Self:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> Self:
        return (-self) + other

    def scale(self, factor: Scalar) -> Self:
        """乘以标量"""
        factor = Fraction(factor)
        if not factor:
            return type(self).zero()
        return type(self)._raw({m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other: object) -> Self:
        if _is_scalar(other):
            return self.scale(other)  # type: ignore[arg-type]
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return type(self)._raw(multiply_terms(self._terms, rhs._terms))

    __rmul__ = __mul__

    def __pow__(self, power: int) -> Self:
        result = type(self).one()
        for _ in range(power):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return bool(self._canonical())

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._canonical() == rhs._canonical()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._canonical().items()))
        return self._hash

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """打印顺序: 次数降序, 因子个数降序, 字典序降序"""
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), len(item[0]), item[0]), reverse=True)

    def __str__(self) -> str:
        name = self.generator_name
        rendered = [
            format_coefficient(coeff, f"{name}[{','.join(map(str, mono))}]" if mono else "")
            for mono, coeff in self.sorted_terms()
        ]
        return join_terms(rendered)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

