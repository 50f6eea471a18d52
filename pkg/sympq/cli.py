"""命令行入口: compute, expand, verify, sweep

退出码: 0 成功; 1 反例或验证失败; 2 输入无法解析; 3 参数超出定义域.
"""

import argparse
import logging
import sys
import time
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple

from .exact_algebra import LaurentPoly, RingMatrix, determinant, permutation_determinant, pfaffian
from .exceptions import (
    ConsistencyError,
    DivisibilityError,
    DomainError,
    NotInSpanError,
    ParseError,
    StructuralError,
    SympqException,
)
from .factorial import (
    FactorialParams,
    check_fg_by_g,
    check_q_rg,
    check_rel_e,
    fac_nimmo_eval,
    fac_separation_check,
    fac_tableau_sum,
    fac_weyl_eval,
    ufac_Q,
    ufac_Q_pfaffian,
    ufac_Q_skew,
)
from .gamma_ring import (
    BasisTag,
    GammaElement,
    coproduct_constants,
    schur_P,
    schur_Q,
    schurP_in_sympP,
    structure_constants,
    to_basis,
    usymp_P,
    usymp_P_skew,
    usymp_Q,
    usymp_Q_skew,
)
from .lambda_ring import (
    LambdaElement,
    expand_in_usymp_schur,
    expansion_text,
    g_tilde_coefficients,
    gamma_to_lambda,
    hook_coefficient,
    usymp_schur,
)
from .laurent_models import (
    SpecializationContext,
    bialternant_SC,
    check_one_row_generating_function,
    check_two_row_generating_function,
    coproduct_check,
    delta_identities,
    expand_in_SC_basis,
    nimmo_eval,
    random_point,
    separation_check,
    skew_separation_check,
    specialize,
    staircase_product_check,
    weyl_hall_littlewood_oracle,
)
from .partitions import (
    Partition,
    SkewShiftedShape,
    StrictPartition,
    add,
    enumerate_partitions,
    enumerate_strict,
    parse_partition,
    parse_skew,
    parse_strict,
    partitions_of,
    strict_partitions_of,
    pieri_kappas,
    staircase,
    staircase_complement,
)
from .pieri_paths import (
    check_b_series,
    class_count,
    count_families_through,
    enumerated_weight_sum,
    path_weight_sum,
    pieri_agreement,
    pieri_expand,
    r1_support,
    b_series,
)
from .tableaux import (
    chain_factorization_sum,
    enumerate_tableaux,
    flip,
    one_variable_determinant,
    tableau_sum,
)
from .utils.common import dumps, parallel_map, random_rational, rational_json, seeded_rng
from .utils.config import DEFAULT_LIMITS, check_limit, default_seed

logger = logging.getLogger("sympq.cli")

_BASES: dict[str, BasisTag] = {
    "Q": BasisTag.SchurQ,
    "schurQ": BasisTag.SchurQ,
    "P": BasisTag.SchurP,
    "schurP": BasisTag.SchurP,
    "QC": BasisTag.SympQ,
    "sympQ": BasisTag.SympQ,
    "PC": BasisTag.SympP,
    "sympP": BasisTag.SympP,
}

_GAMMA_BUILDERS: dict[str, Callable[[StrictPartition], GammaElement]] = {
    "schurQ": schur_Q,
    "schurP": schur_P,
    "sympQ": usymp_Q,
    "sympP": usymp_P,
}

OBJECTS = ("schurQ", "schurP", "sympQ", "sympP", "skewQ", "sC", "SC", "PC", "tableau-sum", "fac-Q")


def _parse_basis(text: str) -> BasisTag:
    try:
        return _BASES[text]
    except KeyError:
        raise ParseError(text, "未知的基") from None


def _terms_json(terms: Sequence[tuple[tuple[int, ...], Fraction]], key: str) -> list[dict]:
    return [{key: list(mono), **rational_json(c)} for mono, c in terms]


def graded_json(e: GammaElement | LambdaElement, obj: str) -> dict:
    """Γ 或 Λ 元素按生成元单项式输出"""
    return {"object": obj, "basis": e.generator_name, "coeffs": _terms_json(e.sorted_terms(), "partition")}


def laurent_json(p: LaurentPoly, obj: str) -> dict:
    """Laurent 多项式输出"""
    return {"object": obj, "nvars": p.nvars, "terms": _terms_json(p.sorted_terms(), "exponents")}


def partition_map_json(coeffs: Mapping[Partition, Fraction], obj: str, basis: str) -> dict:
    """分拆 -> 系数 的展开输出"""
    items = sorted(coeffs.items(), key=lambda item: (item[0].weight, item[0].parts), reverse=True)
    return {
        "object": obj,
        "basis": basis,
        "coeffs": [{"partition": list(mu.parts), **rational_json(c)} for mu, c in items if c],
    }


def _emit(args: argparse.Namespace, text: str, payload: Any) -> None:
    if args.format == "json":
        print(dumps(payload))
    else:
        print(text)


def _context(n: int | None, default: int) -> SpecializationContext:
    n = max(default, 1) if n is None else n
    check_limit("n", n, DEFAULT_LIMITS["max_n"], 1)
    return SpecializationContext(n)


def _emit_gamma(args: argparse.Namespace, e: GammaElement, obj: str, default_n: int) -> None:
    basis = args.basis or "q"
    if args.n is not None or basis == "SC":
        ctx = _context(args.n, default_n)
        p = specialize(e, ctx)
        if basis == "SC":
            coeffs = expand_in_SC_basis(p, ctx)
            _emit(args, expansion_text(coeffs, "SC"), partition_map_json(coeffs, obj, "SC"))
        else:
            _emit(args, str(p), laurent_json(p, obj))
    elif basis == "q":
        _emit(args, str(e), graded_json(e, obj))
    elif basis == "sC":
        coeffs = expand_in_usymp_schur(gamma_to_lambda(e))
        _emit(args, expansion_text(coeffs, "sC"), partition_map_json(coeffs, obj, "sC"))
    else:
        expansion = to_basis(e, _parse_basis(basis))
        _emit(args, str(expansion), expansion.to_json(obj))


def _factorial_params(text: str | None, length: int) -> FactorialParams:
    if text is None:
        return FactorialParams.zeros(length)
    return FactorialParams.parse(text)


def cmd_compute(args: argparse.Namespace) -> int:
    """计算并输出单个对象"""
    obj, shape = args.object, args.shape
    logger.debug(f"compute {obj} {shape}")
    if obj in _GAMMA_BUILDERS:
        lam = parse_strict(shape)
        _emit_gamma(args, _GAMMA_BUILDERS[obj](lam), obj, lam.length)
    elif obj == "skewQ":
        lam, mu = parse_skew(shape)
        _emit_gamma(args, usymp_Q_skew(lam, mu), obj, lam.length)
    elif obj == "fac-Q":
        lam, mu = parse_skew(shape)
        a = _factorial_params(args.a, max(lam.part(1), 1))
        _emit_gamma(args, ufac_Q_skew(lam, mu, a), obj, lam.length)
    elif obj == "sC":
        mu = parse_partition(shape, strict=False)
        e = usymp_schur(mu)
        if args.n is None:
            _emit(args, str(e), graded_json(e, obj))
        else:
            p = specialize(e, _context(args.n, mu.length))
            _emit(args, str(p), laurent_json(p, obj))
    elif obj == "SC":
        mu = parse_partition(shape, strict=False)
        p = bialternant_SC(mu, _context(args.n, mu.length))
        _emit(args, str(p), laurent_json(p, obj))
    elif obj == "PC":
        lam = parse_strict(shape)
        p = specialize(usymp_P(lam), _context(args.n, lam.length))
        _emit(args, str(p), laurent_json(p, obj))
    else:
        lam, mu = parse_skew(shape)
        ctx = _context(args.n, lam.length)
        p = tableau_sum(SkewShiftedShape(lam, mu), ctx.n, primed_diagonal=not args.ptab)
        _emit(args, str(p), laurent_json(p, obj))
    return 0


def parse_product(text: str) -> tuple[StrictPartition, StrictPartition]:
    """解析 `μ * ν`

    Raises:
        ParseError: 不是恰好两个因子
    """
    factors = text.split("*")
    if len(factors) != 2:
        raise ParseError(text, "乘积须形如 `μ * ν`")
    return parse_strict(factors[0]), parse_strict(factors[1])


def cmd_expand(args: argparse.Namespace) -> int:
    """两个基元素乘积在同一组基下的展开"""
    mu, nu = parse_product(args.product)
    basis = _parse_basis(args.basis)
    if basis is BasisTag.SympP:
        expansion = structure_constants(mu, nu)
    else:
        builder = _GAMMA_BUILDERS[{"Q": "schurQ", "P": "schurP", "QC": "sympQ"}[basis.value]]
        expansion = to_basis(builder(mu) * builder(nu), basis)
    _emit(args, str(expansion), expansion.to_json("product"))
    return 0


class Task(NamedTuple):
    """一个待检验实例"""

    kind: str
    args: tuple
    label: str
    replay: str


@dataclass
class SweepReport:
    """一次 verify 或 sweep 的结果

    Attributes:
        target: 例如 `sweep 1`, `verify pieri`
        bounds: 规模参数
        seed: 随机种子
        instances: 检验的实例数
        failures: 反例列表, 每项含实例描述、细节与复现命令
        wall_time: 耗时 (秒)
    """

    target: str
    bounds: dict[str, int]
    seed: int
    instances: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def status(self) -> str:
        """验证状态"""
        return "verified-to-bound" if not self.failures else "counterexample"

    def to_json(self, timing: bool = False) -> dict:
        """JSON 形式, 不带 --timing 时不含耗时"""
        payload = {
            "target": self.target,
            "bounds": self.bounds,
            "seed": self.seed,
            "instances": self.instances,
            "failures": self.failures,
            "status": self.status,
        }
        if timing:
            payload["wall_time"] = round(self.wall_time, 3)
        return payload

    def render(self, timing: bool = False) -> str:
        """文本形式"""
        bounds = ", ".join(f"{k}={v}" for k, v in sorted(self.bounds.items()))
        lines = [
            f"{self.target}: {self.status}",
            f"  规模: {bounds}",
            f"  实例数: {self.instances}",
            f"  失败数: {len(self.failures)}",
            f"  种子: {self.seed}",
        ]
        if timing:
            lines.append(f"  耗时: {self.wall_time:.3f}s")
        for failure in self.failures:
            lines.append(f"  - {failure['instance']}: {failure['detail']}")
            lines.append(f"    复现: {failure['replay']}")
        return "\n".join(lines)


def _bad_coefficients(coeffs: Mapping[Partition, Fraction]) -> str | None:
    bad = {str(mu): str(c) for mu, c in coeffs.items() if c < 0 or c.denominator != 1}
    return f"非负整数性不成立: {bad}" if bad else None


def _flag(ok: bool, detail: str) -> str | None:
    return None if ok else detail


def _check_conj1(mu: StrictPartition, nu: StrictPartition) -> str | None:
    return _bad_coefficients(structure_constants(mu, nu).coeffs)


def _check_conj2(lam: StrictPartition, mu: StrictPartition) -> str | None:
    return _bad_coefficients(coproduct_constants(lam, mu).coeffs)


def _check_conj3a(lam: StrictPartition) -> str | None:
    return _bad_coefficients(g_tilde_coefficients(lam))


def _check_conj3b(lam: StrictPartition, n: int) -> str | None:
    ctx = SpecializationContext(n)
    return _bad_coefficients(expand_in_SC_basis(specialize(usymp_P(lam), ctx), ctx))


def _check_conj4(lam: StrictPartition) -> str | None:
    return _bad_coefficients(schurP_in_sympP(lam).coeffs)


def _check_pieri(mu: StrictPartition, r: int) -> str | None:
    if not pieri_agreement(mu, r):
        return "四种算法结果不一致"
    expansion = pieri_expand(mu, r)
    if r == 1 and (set(expansion) != r1_support(mu) or any(c != 1 for c in expansion.values())):
        return "r = 1 时展开不是无重数的加减一格规则"
    if mu.weight + r <= 8:
        for lam in expansion:
            for kappa in pieri_kappas(mu, lam, r):
                if class_count(mu, lam, kappa) != count_families_through(mu, lam, kappa):
                    return f"λ={lam}, κ={kappa} 的格路族计数与 2 的幂不符"
    return None


def _check_tableaux(lam: StrictPartition, mu: StrictPartition, n: int) -> str | None:
    shape = SkewShiftedShape(lam, mu)
    ctx = SpecializationContext(n)
    q_sum = tableau_sum(shape, n)
    if q_sum != specialize(usymp_Q_skew(lam, mu), ctx):
        return "QTab 求和与 Q^C_{λ/μ} 不一致"
    if tableau_sum(shape, n, primed_diagonal=False) != specialize(usymp_P_skew(lam, mu), ctx):
        return "PTab 求和与 P^C_{λ/μ} 不一致"
    if chain_factorization_sum(shape, n) != q_sum:
        return "逐层分解与直接求和不一致"
    if n == 1:
        if lam.length - mu.length <= 1:
            if one_variable_determinant(shape) != q_sum:
                return "单变量行列式公式不成立"
        elif q_sum:
            return "l(λ)-l(μ) >= 2 时单变量求和应为 0"
    return None


def _check_flip(lam: StrictPartition, mu: StrictPartition, r: int, n: int) -> str | None:
    shape = SkewShiftedShape(lam, mu)
    for t in enumerate_tableaux(shape, n):
        image = flip(t, r, n)
        if not image.is_valid(n):
            return f"翻转结果不是合法的表: {t.entries}"
        if flip(image, r, n) != t:
            return "翻转不是对合"
        if image.exponents(n) != tuple(-e for e in reversed(t.exponents(n))):
            return "翻转后的权不是 x_i -> x_{n+1-i}^{-1}"
    dual = SkewShiftedShape(staircase_complement(mu, r), staircase_complement(lam, r))
    return _flag(tableau_sum(dual, n) == tableau_sum(shape, n), "翻转前后的表和不相等")


def _check_sep_var(lam: StrictPartition, n: int, m: int) -> str | None:
    if not separation_check(lam, n, m):
        return "变量分离不成立"
    if not coproduct_check(lam, n, m):
        return "余积系数不成立"
    for d in range(lam.weight + 1):
        for nu in strict_partitions_of(d):
            if lam.contains(nu) and not skew_separation_check(lam, nu, n, m):
                return f"斜变量分离在 ν={nu} 处不成立"
    return None


def _check_nimmo(lam: StrictPartition, n: int, points: int, seed: int) -> str | None:
    ctx = SpecializationContext(n)
    p_val, q_val = specialize(usymp_P(lam), ctx), specialize(usymp_Q(lam), ctx)
    rng = seeded_rng(seed, f"nimmo/{lam}/{n}")
    for _ in range(points):
        pt = random_point(n, rng)
        if nimmo_eval(lam, "P", pt) != p_val.evaluate(pt.values):
            return f"P 型在 {pt.values} 处不一致"
        if nimmo_eval(lam, "Q", pt) != q_val.evaluate(pt.values):
            return f"Q 型在 {pt.values} 处不一致"
    return None


def _check_hall_littlewood(lam: Partition, n: int, points: int, seed: int) -> str | None:
    ctx = SpecializationContext(n)
    strict = len(set(lam.parts)) == len(lam.parts)
    expected_p = specialize(usymp_P(StrictPartition(lam.parts)), ctx) if strict else None
    expected_s = bialternant_SC(lam, ctx)
    rng = seeded_rng(seed, f"hl/{lam}/{n}")
    for _ in range(points):
        pt = random_point(n, rng)
        if weyl_hall_littlewood_oracle(lam, 0, pt.values) != expected_s.evaluate(pt.values):
            return f"t = 0 时与 S^C_λ 不一致, 点 {pt.values}"
        if expected_p is not None and weyl_hall_littlewood_oracle(lam, -1, pt.values) != expected_p.evaluate(pt.values):
            return f"t = -1 时与 P^C_λ 不一致, 点 {pt.values}"
    return None


def _params(seed: int, key: str, length: int) -> FactorialParams:
    return FactorialParams.random(seeded_rng(seed, key), max(length, 1))


def _check_fac_tableaux(lam: StrictPartition, mu: StrictPartition, n: int, trial: int, seed: int) -> str | None:
    a = _params(seed, f"fac/{lam}/{mu}/{trial}", lam.part(1))
    lhs = fac_tableau_sum(SkewShiftedShape(lam, mu), n, a)
    ok = lhs == specialize(ufac_Q_skew(lam, mu, a), SpecializationContext(n))
    return _flag(ok, f"阶乘表求和与 Q^C_{{λ/μ}}(x|a) 不一致, a={a}")


def _check_fac_forms(lam: StrictPartition, n: int, trial: int, seed: int) -> str | None:
    a = _params(seed, f"fac-forms/{lam}/{trial}", lam.part(1))
    if ufac_Q_pfaffian(lam, a) != ufac_Q(lam, a):
        return f"Pfaffian 形式不一致, a={a}"
    if lam.length > n:
        return None
    value = specialize(ufac_Q(lam, a), SpecializationContext(n))
    pt = random_point(n, seeded_rng(seed, f"fac-pt/{lam}/{n}/{trial}"))
    expected = value.evaluate(pt.values)
    if fac_nimmo_eval(lam, a, pt.values) != expected:
        return f"阶乘 Nimmo 型在 {pt.values} 处不一致, a={a}"
    if fac_weyl_eval(lam, a, pt.values) != expected:
        return f"阶乘 Weyl 求和在 {pt.values} 处不一致, a={a}"
    return None


def _check_fac_one_row(r: int, n: int, trial: int, seed: int) -> str | None:
    a = _params(seed, f"fac-row/{r}/{trial}", r)
    if not check_fg_by_g(r, a):
        return f"g̃_{r}(x|a) 的初等对称展开不成立, a={a}"
    for i in range(r + 1):
        for j in range(r + 1 - i):
            if not check_rel_e(a, r, i, j):
                return f"e 恒等式在 i={i}, j={j} 处不成立, a={a}"
    return _flag(check_q_rg(r, n, a), f"单行分裂恒等式不成立, a={a}")


def _check_fac_sep(lam: StrictPartition, trial: int, seed: int) -> str | None:
    a = _params(seed, f"fac-sep/{lam}/{trial}", lam.part(1))
    return _flag(fac_separation_check(lam, a), f"阶乘变量分离不成立, a={a}")


def _check_delta(r: int, s: int, n: int) -> str | None:
    if not delta_identities(r, s, SpecializationContext(n)):
        return "阶梯代换恒等式不成立"
    product = structure_constants(staircase(r), staircase(s))
    if product.coeffs != {add(staircase(r), staircase(s)): 1}:
        return f"P^C_δr P^C_δs 展开为 {product}"
    for d in range(r * (r + 1) // 2 + 1):
        for mu in strict_partitions_of(d):
            if staircase(r).contains(mu) and coproduct_constants(staircase(r), mu).coeffs != {staircase_complement(mu, r): 1}:
                return f"δ_{r} 的余积在 μ={mu} 处不符"
    return None


def _check_staircase(mu: Partition, n: int) -> str | None:
    return _flag(staircase_product_check(mu, SpecializationContext(n)), "P^C_{μ+δ_n} 分解不成立")


def _check_length2_gf(n: int, order: int, seed: int) -> str | None:
    if not check_one_row_generating_function(n, order, seed):
        return "单行生成函数不成立"
    return _flag(check_two_row_generating_function(n, order), "两行生成函数不成立")


def _check_b_series(s: int, order: int) -> str | None:
    if not check_b_series(s, order):
        return "b 级数三种算法不一致"
    for r in range(1, s + order + 1):
        dp = path_weight_sum(s, r, order)
        if dp != b_series(r, s, order).series:
            return f"w^{r}_{s} 与 b^{r}_{s} 不一致"
        if enumerated_weight_sum(s, r, order) != dp:
            return f"w^{r}_{s} 的枚举与递推不一致"
    return None


def _random_matrix(rng: Any, rows: int, cols: int, skew: bool) -> RingMatrix:
    entries = [[random_rational(rng, 9, nonzero=False) for _ in range(cols)] for _ in range(rows)]
    if skew:
        for i in range(rows):
            entries[i][i] = Fraction(0)
            for j in range(i):
                entries[i][j] = -entries[j][i]
    return RingMatrix(tuple(tuple(row) for row in entries), Fraction(1))


def _check_pfaffian(size: int, trial: int, seed: int) -> str | None:
    rng = seeded_rng(seed, f"pf/{size}/{trial}")
    a = _random_matrix(rng, size, size, skew=True)
    b = _random_matrix(rng, size, size, skew=False)
    pf = pfaffian(a)
    if pf * pf != determinant(a):
        return "Pf(A)^2 != det(A)"
    if pfaffian(b @ a @ b.transpose()) != determinant(b) * pf:
        return "Pf(B A B^T) != det(B) Pf(A)"
    if size <= 6 and permutation_determinant(a) != determinant(a):
        return "行列式两种算法不一致"
    return None


def _check_hook(r: int) -> str | None:
    coeffs = g_tilde_coefficients(StrictPartition((r,)))
    for d in range(r + 1):
        for mu in partitions_of(d):
            if coeffs.get(mu, 0) != hook_coefficient(r, mu):
                return f"μ={mu}: 实际 {coeffs.get(mu, 0)}, 钩形公式 {hook_coefficient(r, mu)}"
    return None


def _length2_expected(r: int, s: int) -> dict[StrictPartition, int]:
    expected = {StrictPartition.of((r, s)): 1, StrictPartition.of((r - s,)): 1}
    for j in range(1, s):
        expected[StrictPartition((r - j, s - j))] = 2
    return expected


def _check_conj4_length2(r: int, s: int) -> str | None:
    coeffs = schurP_in_sympP(StrictPartition.of((r, s))).coeffs
    return _flag(coeffs == _length2_expected(r, s), f"展开为 {coeffs}")


_CHECKS: dict[str, Callable[..., str | None]] = {
    "conj1": _check_conj1,
    "conj2": _check_conj2,
    "conj3a": _check_conj3a,
    "conj3b": _check_conj3b,
    "conj4": _check_conj4,
    "pieri": _check_pieri,
    "tableaux": _check_tableaux,
    "flip": _check_flip,
    "sep-var": _check_sep_var,
    "nimmo": _check_nimmo,
    "hall-littlewood": _check_hall_littlewood,
    "fac-tableaux": _check_fac_tableaux,
    "fac-forms": _check_fac_forms,
    "fac-one-row": _check_fac_one_row,
    "fac-sep": _check_fac_sep,
    "delta": _check_delta,
    "staircase": _check_staircase,
    "length2-gf": _check_length2_gf,
    "b-series": _check_b_series,
    "pfaffian": _check_pfaffian,
    "hook": _check_hook,
    "conj4-length2": _check_conj4_length2,
}


def run_task(task: Task) -> dict | None:
    """执行单个实例, 成功返回 None, 否则返回反例记录"""
    try:
        detail = _CHECKS[task.kind](*task.args)
    except (StructuralError, DivisibilityError, NotInSpanError, ConsistencyError) as exc:
        logger.error(f"{task.label} 出现内部错误: {exc}")
        detail = f"{type(exc).__name__}: {exc}"
    if detail is None:
        return None
    logger.warning(f"{task.label} 失败: {detail}")
    return {"instance": task.label, "detail": detail, "replay": task.replay}


def _skew_pairs(max_weight: int) -> Iterator[tuple[StrictPartition, StrictPartition]]:
    for lam in enumerate_strict(max_weight):
        for mu in enumerate_strict(lam.weight):
            if lam.contains(mu):
                yield lam, mu


def _verify_tasks(theorem: str, b: dict[str, int], seed: int) -> list[Task]:
    w, n = b.get("max_weight", 0), b.get("n", 1)
    replay = f"sympq verify {theorem} --seed {seed}"
    if theorem == "pieri":
        return [
            Task("pieri", (mu, r), f"μ={mu}, r={r}", f'sympq expand "{mu} * {r}"')
            for mu in enumerate_strict(b["max_mu"]) for r in range(1, b["max_r"] + 1)
        ]
    if theorem == "tableaux":
        return [
            Task("tableaux", (lam, mu, k), f"{SkewShiftedShape(lam, mu)}, n={k}", f"sympq compute tableau-sum {SkewShiftedShape(lam, mu)} --n {k}")
            for lam, mu in _skew_pairs(w) for k in range(1, n + 1)
        ]
    if theorem == "flip":
        r = b["r"]
        return [
            Task("flip", (lam, mu, r, k), f"{SkewShiftedShape(lam, mu)} ⊆ δ_{r}, n={k}", f"{replay} --r {r} --n {k}")
            for lam, mu in _skew_pairs(r * (r + 1) // 2) if staircase(r).contains(lam) for k in range(1, n + 1)
        ]
    if theorem == "sep-var":
        return [
            Task("sep-var", (lam, k, m), f"λ={lam}, n={k}, m={m}", f"{replay} --max-weight {lam.weight} --n {max(k, m)}")
            for lam in enumerate_strict(w) for k in range(1, n + 1) for m in range(1, n + 1)
        ]
    if theorem in ("nimmo", "hall-littlewood"):
        points = b["points"]
        shapes: Iterator[Partition] = enumerate_strict(w) if theorem == "nimmo" else enumerate_partitions(w)
        return [
            Task(theorem, (lam, k, points, seed), f"λ={lam}, n={k}", f"{replay} --max-weight {lam.weight} --n {k} --points {points}")
            for lam in shapes for k in range(max(lam.length, 1), n + 1)
        ]
    if theorem == "fac-tableaux":
        trials = b["trials"]
        tasks = [
            Task("fac-tableaux", (lam, mu, k, t, seed), f"{SkewShiftedShape(lam, mu)}, n={k}, 参数组 {t}", f"{replay} --max-weight {lam.weight} --n {k}")
            for lam, mu in _skew_pairs(w) for k in range(1, n + 1) for t in range(trials)
        ]
        for lam in enumerate_strict(w):
            for t in range(trials):
                tasks.append(Task("fac-forms", (lam, n, t, seed), f"λ={lam} 的 Pfaffian/Nimmo/Weyl 形式, 参数组 {t}", replay))
                tasks.append(Task("fac-sep", (lam, t, seed), f"λ={lam} 的阶乘变量分离, 参数组 {t}", replay))
        for r in range(1, w + 2):
            for t in range(trials):
                tasks.append(Task("fac-one-row", (r, n, t, seed), f"单行 r={r}, 参数组 {t}", replay))
        return tasks
    if theorem == "delta":
        return [
            Task("delta", (r, s, k), f"δ_{r}+δ_{s}, n={k}", f"{replay} --n {k}")
            for k in range(1, n + 1) for r in range(1, k + 1) for s in range(r + 1)
        ]
    if theorem == "staircase":
        return [
            Task("staircase", (mu, k), f"μ={mu}, n={k}", f"sympq compute SC {mu} --n {k}")
            for mu in enumerate_partitions(w) for k in range(max(mu.length, 1), n + 1)
        ]
    if theorem == "length2-gf":
        return [Task("length2-gf", (k, b["order"], seed), f"n={k}, K={b['order']}", f"{replay} --n {k} --order {b['order']}") for k in range(1, n + 1)]
    if theorem == "b-series":
        return [Task("b-series", (s, b["order"]), f"s={s}, K={b['order']}", f"{replay} --max-weight {s} --order {b['order']}") for s in range(w + 1)]
    if theorem == "pfaffian":
        return [
            Task("pfaffian", (size, t, seed), f"{size} 阶, 第 {t} 组", f"{replay} --max-weight {size}")
            for size in range(2, w + 1, 2) for t in range(b["trials"])
        ]
    if theorem == "hook":
        return [Task("hook", (r,), f"r={r}", f"sympq compute sympP {r} --basis sC") for r in range(1, w + 1)]
    return [
        Task("conj4-length2", (r, s), f"(r,s)=({r},{s})", f"sympq compute schurP {r},{s} --basis PC")
        for r in range(2, w + 1) for s in range(1, r)
    ]


def _sweep_tasks(conjecture: str, b: dict[str, int]) -> list[Task]:
    w = b["max_weight"]
    if conjecture == "1":
        return [
            Task("conj1", (mu, nu), f"μ={mu}, ν={nu}", f'sympq expand "{mu} * {nu}"')
            for mu in enumerate_strict(w) for nu in enumerate_strict(w - mu.weight) if (nu.weight, nu.parts) <= (mu.weight, mu.parts)
        ]
    if conjecture == "2":
        return [
            Task("conj2", (lam, mu), f"λ={lam}, μ={mu}", f"sympq compute skewQ {SkewShiftedShape(lam, mu)} --basis QC")
            for lam, mu in _skew_pairs(w)
        ]
    if conjecture == "3a":
        return [Task("conj3a", (lam,), f"λ={lam}", f"sympq compute sympP {lam} --basis sC") for lam in enumerate_strict(w)]
    if conjecture == "3b":
        n = b["n"]
        return [
            Task("conj3b", (lam, n), f"λ={lam}, n={n}", f"sympq compute sympP {lam} --n {n} --basis SC")
            for lam in enumerate_strict(w) if lam.length <= n
        ]
    return [Task("conj4", (lam,), f"λ={lam}", f"sympq compute schurP {lam} --basis PC") for lam in enumerate_strict(w)]


def _run_report(target: str, bounds: dict[str, int], seed: int, tasks: list[Task], args: argparse.Namespace) -> int:
    report = SweepReport(target, bounds, seed, instances=len(tasks))
    logger.info(f"{target}: 共 {len(tasks)} 个实例, {args.jobs} 个任务")
    start = time.perf_counter()
    results = parallel_map(run_task, tasks, args.jobs)
    report.wall_time = time.perf_counter() - start
    report.failures = [r for r in results if r is not None]
    _emit(args, report.render(args.timing), report.to_json(args.timing))
    return 0 if not report.failures else 1


_VERIFY_DEFAULTS: dict[str, dict[str, int]] = {
    "pieri": {"max_mu": 6, "max_r": 4},
    "tableaux": {"max_weight": 4, "n": 2},
    "flip": {"r": 3, "n": 2},
    "sep-var": {"max_weight": 3, "n": 1},
    "nimmo": {"max_weight": 4, "n": 3, "points": 3},
    "hall-littlewood": {"max_weight": 3, "n": 2, "points": 2},
    "fac-tableaux": {"max_weight": 3, "n": 2, "trials": 2},
    "delta": {"n": 2},
    "length2-gf": {"n": 2, "order": 6},
    "b-series": {"max_weight": 6, "order": 10},
    "pfaffian": {"max_weight": 8, "trials": 3},
    "hook": {"max_weight": 8},
    "staircase": {"max_weight": 3, "n": 2},
    "conj4-length2": {"max_weight": 8},
}

THEOREMS = tuple(_VERIFY_DEFAULTS)


def _bounds(defaults: Mapping[str, int], args: argparse.Namespace) -> dict[str, int]:
    bounds = {}
    for key, value in defaults.items():
        given = getattr(args, key, None)
        bounds[key] = value if given is None else given
    return bounds


def _check_bounds(bounds: Mapping[str, int], theorem: str = "") -> None:
    limits = DEFAULT_LIMITS
    if "max_weight" in bounds:
        limit = limits["max_pfaffian"] if theorem == "pfaffian" else limits["max_weight"]
        check_limit("max-weight", bounds["max_weight"], limit)
    if "max_mu" in bounds:
        check_limit("max-mu", bounds["max_mu"], limits["max_weight"])
        check_limit("max-r", bounds["max_r"], limits["max_weight"], 1)
    if "n" in bounds:
        check_limit("n", bounds["n"], limits["max_weyl_n"] if theorem == "hall-littlewood" else limits["max_n"], 1)
    if "r" in bounds:
        check_limit("r", bounds["r"], limits["max_n"] + 1, 1)
    if "order" in bounds:
        check_limit("order", bounds["order"], limits["max_order"])
    for key in ("points", "trials"):
        if key in bounds:
            check_limit(key, bounds[key], limits["max_points"], 1)


def cmd_verify(args: argparse.Namespace) -> int:
    """在给定规模内检验一条定理"""
    bounds = _bounds(_VERIFY_DEFAULTS[args.theorem], args)
    _check_bounds(bounds, args.theorem)
    return _run_report(f"verify {args.theorem}", bounds, args.seed, _verify_tasks(args.theorem, bounds, args.seed), args)


def cmd_sweep(args: argparse.Namespace) -> int:
    """在给定规模内检验一条猜想"""
    defaults = {"max_weight": 6, "n": 2} if args.conjecture == "3b" else {"max_weight": 6}
    bounds = _bounds(defaults, args)
    _check_bounds(bounds)
    return _run_report(f"sweep {args.conjecture}", bounds, args.seed, _sweep_tasks(args.conjecture, bounds), args)


def build_parser() -> argparse.ArgumentParser:
    """构造参数解析器"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="输出格式")
    common.add_argument("--seed", type=int, default=None, help="随机种子, 默认读取 SYMPQ_SEED")
    common.add_argument("--jobs", type=int, default=1, help="并行任务数")
    common.add_argument(
        "--log-level",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        default="WARNING",
        help="日志级别, 日志输出到 stderr",
    )
    common.add_argument("--timing", action="store_true", help="输出耗时")

    parser = argparse.ArgumentParser(prog="sympq", description="辛 P/Q 函数的精确计算与验证")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", parents=[common], help="计算单个对象")
    compute.add_argument("object", choices=OBJECTS)
    compute.add_argument("shape", help="分拆, 例如 `4,3,1`, 斜形状写作 `λ/μ`, 空分拆写作 `-`")
    compute.add_argument("--n", type=int, default=None, help="变量个数, 给出时输出 Laurent 多项式")
    compute.add_argument("--a", default=None, help="阶乘参数, 例如 `0,1/2,3`")
    compute.add_argument("--basis", default=None, help="q, Q, P, QC, PC, sC 或 SC")
    compute.add_argument("--ptab", action="store_true", help="tableau-sum 对角线上不允许带撇字母")
    compute.set_defaults(handler=cmd_compute)

    expand = sub.add_parser("expand", parents=[common], help="展开乘积 `μ * ν`")
    expand.add_argument("product")
    expand.add_argument("--basis", default="sympP", help="Q, P, QC 或 PC")
    expand.set_defaults(handler=cmd_expand)

    verify = sub.add_parser("verify", parents=[common], help="检验定理")
    verify.add_argument("theorem", choices=THEOREMS)
    for flag in ("--max-weight", "--n", "--r", "--max-mu", "--max-r", "--order", "--points", "--trials"):
        verify.add_argument(flag, type=int, default=None)
    verify.set_defaults(handler=cmd_verify)

    sweep = sub.add_parser("sweep", parents=[common], help="检验猜想")
    sweep.add_argument("conjecture", choices=("1", "2", "3a", "3b", "4"))
    sweep.add_argument("--max-weight", type=int, default=None)
    sweep.add_argument("--n", type=int, default=None)
    sweep.set_defaults(handler=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """命令行入口, 返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(
        format="%(levelname)s [%(asctime)s] %(name)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        level=args.log_level,
        stream=sys.stderr,
    )
    try:
        if args.seed is None:
            args.seed = default_seed()
        check_limit("jobs", args.jobs, 64, 1)
        return args.handler(args)
    except ParseError as exc:
        print(f"无法解析输入: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"参数超出定义域: {exc}", file=sys.stderr)
        return 3
    except SympqException as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return 1
