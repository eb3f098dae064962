"""
定理校验服务
分别构造各同构定理的两侧群胚，先断言证明中的中间恒等式，再用同构搜索比较，
生成带可重放证书的报告
"""
import time
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..core import (
    get_logger, get_settings, ensure, Settings,
    GfBaseException, SearchBudgetExceededError, InvariantViolationError, NotCliffordError
)
from ..algebra.semigroup import (
    FiniteInverseSemigroup, subsemigroup, two_element_semilattice,
    direct_product, cyclic_group, adjoin_zero
)
from ..algebra.congruence import (
    Congruence, IdempotentCongruence, close, nu_min, quotient, kernel,
    least_clifford, least_clifford_oracle, least_commutative, nu_ab_oracle,
    least_clifford_by_enumeration, least_commutative_by_enumeration,
    enumerate_normal_congruences
)
from ..algebra.spectrum import (
    Character, CharacterSet, enumerate_characters, fixed_characters, homs_to_two,
    rho_from_set, set_from_rho, pullback_characters, enumerate_invariant_sets,
    bruteforce_character_supports, separates, evaluate
)
from ..algebra.groupoid import (
    FiniteGroupoid, GroupoidHom, universal_groupoid, underlying_groupoid, restrict,
    is_normal_subgroupoid, quotient_groupoid, kernel_of_hom, fixed_units, g_fix,
    isotropy_group, commutator_bundle, abelianize, disjoint_union, pullback_selection
)
from ..algebra.isomorphism import are_isomorphic
from ..algebra.presented.words import random_word, enumerate_words, is_reduced
from ..algebra.presented.fcis import (
    fcis_characters, fcis_evaluate_char, fcis_quotient_by_char, fcis_from_word,
    fcis_multiply, fcis_invert, fcis_idempotent_semilattice, fcis_soundness_sweep,
    fcis_nu_char_related, idempotent_of, multiply_with_zero
)
from ..algebra.presented.cuntz import (
    cuntz_homs_to_two, cuntz_multiply, generator, generator_star, UNIT, ZERO
)
from ..models import (
    TheoremReport, TheoremTag, Verdict, InstanceDescriptor, PresentedFamily
)
from .corpus_reader import LoadedCorpus, resolve_pairs

logger = get_logger()

# 全枚举同余的 |S| 上限
SMALL_ORDER = 6

Check = Callable[[], Tuple[Dict[str, Any], Dict[str, Any]]]
CongruenceSource = Union[Congruence, Callable[[], Congruence]]


def _run(tag: TheoremTag, instance: InstanceDescriptor, check: Check) -> TheoremReport:
    """执行一个校验，把异常映射为结论"""
    start = time.perf_counter()
    certificate: Optional[Dict[str, Any]] = None
    refutation: Optional[str] = None
    details: Dict[str, Any] = {}
    try:
        certificate, details = check()
        verdict = Verdict.VERIFIED
    except SearchBudgetExceededError as e:
        verdict = Verdict.BUDGET_EXCEEDED
        refutation = e.message
        details = dict(e.details)
    except GfBaseException as e:
        verdict = Verdict.REFUTED
        refutation = e.message
        details = {"error_code": e.error_code, **e.details}

    elapsed = int((time.perf_counter() - start) * 1000)
    report = TheoremReport(
        theorem=tag,
        instance=instance,
        verdict=verdict,
        certificate=certificate,
        refutation=refutation,
        details=details,
        wall_time_ms=elapsed
    )

    log = logger.info if verdict == Verdict.VERIFIED else logger.warning
    log(
        f"定理校验完成: {tag.value} / {instance.semigroup}",
        extra={
            "theorem": tag.value,
            "semigroup": instance.semigroup,
            "congruence": instance.congruence,
            "verdict": verdict.value,
            "wall_time_ms": elapsed
        }
    )
    return report


def _compare(left: FiniteGroupoid, right: FiniteGroupoid, budget: Optional[int]) -> Dict[str, Any]:
    """两侧必须同构，返回证书"""
    result = are_isomorphic(left, right, budget)
    if not result.isomorphic:
        raise InvariantViolationError(
            f"{left.name} 与 {right.name} 不同构",
            details={"invariant": result.refutation}
        )
    return {
        "left": left.name,
        "right": right.name,
        "arrows": len(left),
        "units": len(left.units),
        "arrow_map": list(result.certificate),
        "nodes": result.nodes,
    }


def verify_main_theorem(
    S: FiniteInverseSemigroup,
    nu: CongruenceSource,
    label: str = "custom",
    budget: Optional[int] = None
) -> TheoremReport:
    """G_u(S/ν) ≅ G_u(S)_{F_ν} / G_u(ker ν)_{F_ν}"""

    def check():
        congruence = nu() if callable(nu) else nu
        Q, q = quotient(S, congruence)
        left = universal_groupoid(Q)
        G = universal_groupoid(S)

        F = set_from_rho(S, congruence.restrict_to_idempotents())
        ensure(F == pullback_characters(S, congruence), "F_ν 与直接拉回的特征集不一致", semigroup=S.name)
        GF = restrict(G, G.units_for(F), name=f"{G.name}_Fν")

        kernel_germs = pullback_selection(GF, G.germs_of(kernel(S, congruence)))
        ensure(is_normal_subgroupoid(GF, kernel_germs), "核芽子群胚不是正规的", semigroup=S.name)
        right, _ = quotient_groupoid(GF, kernel_germs)

        # Φ([s, ξ∘q]) = [q(s), ξ]
        phi = GroupoidHom(GF, left, tuple(
            left.germ_arrow(q(G.germs[p].element), q(G.germs[p].base)) for p in GF.origin
        ))
        ker_phi = kernel_of_hom(phi)
        ensure(ker_phi.members == kernel_germs.members, "ker Φ 与核芽子群胚不一致", semigroup=S.name)
        ensure(set(phi.map) == set(left.arrows()), "Φ 不是满射", semigroup=S.name)

        certificate = _compare(right, left, budget)
        details = {
            "quotient_order": Q.order,
            "f_nu": F.names(),
            "restricted_arrows": len(GF),
            "kernel_germs": len(kernel_germs),
        }
        return certificate, details

    instance = InstanceDescriptor(semigroup=S.name, congruence=label)
    return _run(TheoremTag.MAIN, instance, check)


def verify_min_restriction(
    S: FiniteInverseSemigroup,
    rho: IdempotentCongruence,
    label: str = "custom",
    budget: Optional[int] = None
) -> TheoremReport:
    """G_u(S/ν_{ρ,min}) ≅ G_u(S)_{F_ρ}"""

    def check():
        nu = nu_min(S, rho)
        Q, _ = quotient(S, nu)
        left = universal_groupoid(Q)
        G = universal_groupoid(S)
        F = set_from_rho(S, rho)
        right = restrict(G, G.units_for(F), name=f"{G.name}_Fρ")

        kernel_germs = pullback_selection(right, G.germs_of(kernel(S, nu)))
        ensure(kernel_germs.members == right.units, "ν_min 的核芽不只是单位", semigroup=S.name)

        certificate = _compare(left, right, budget)
        return certificate, {"quotient_order": Q.order, "f_rho": F.names()}

    instance = InstanceDescriptor(semigroup=S.name, congruence=label)
    return _run(TheoremTag.MIN_RESTRICTION, instance, check)


def audit_characters(S: FiniteInverseSemigroup) -> None:
    """ξ_e 表示必须与全部非零乘法映射 E(S) → {0,1} 一致"""
    supports = sorted(sorted(x) for x in bruteforce_character_supports(S))
    ensure(
        supports == sorted(sorted(xi.support()) for xi in enumerate_characters(S)),
        "ξ_e 表示与暴力枚举的特征不一致", semigroup=S.name
    )


def verify_clifford_theorem(
    S: FiniteInverseSemigroup,
    budget: Optional[int] = None,
    settings: Optional[Settings] = None
) -> TheoremReport:
    """G_u(S^Clif) ≅ G_u(S)_fix"""
    settings = settings or get_settings()

    def check():
        characters_checked = len(S.idempotents()) <= settings.max_bruteforce_idempotents
        if characters_checked:
            audit_characters(S)

        fixed = fixed_characters(S)
        rho_clif = rho_from_set(S, fixed)
        ensure(set_from_rho(S, rho_clif) == fixed, "F_{ρ_Clif} ≠ Ê(S)_fix", semigroup=S.name)

        nu = least_clifford(S)
        ensure(nu == least_clifford_oracle(S), "最小 Clifford 同余与生成对预言机不一致", semigroup=S.name)
        enumerated = S.order <= SMALL_ORDER
        if enumerated:
            ensure(nu == least_clifford_by_enumeration(S), "最小 Clifford 同余与全枚举结果不一致", semigroup=S.name)

        G = universal_groupoid(S)
        ensure(fixed_units(G) == G.units_for(fixed), "泛群胚的不动点与不动特征不一致", semigroup=S.name)
        # 芽构造与“箭头即元素”的模型必须同构
        _compare(G, underlying_groupoid(S), budget)

        Q, _ = quotient(S, nu)
        certificate = _compare(universal_groupoid(Q), g_fix(G), budget)
        details = {
            "fixed_characters": fixed.names(),
            "quotient_order": Q.order,
            "enumeration_checked": enumerated,
            "characters_checked": characters_checked,
        }
        return certificate, details

    instance = InstanceDescriptor(semigroup=S.name, congruence="least_clifford")
    return _run(TheoremTag.CLIFFORD, instance, check)


def verify_abelianization_theorem(
    S: FiniteInverseSemigroup,
    budget: Optional[int] = None,
    settings: Optional[Settings] = None
) -> TheoremReport:
    """G_u(S^ab) ≅ G_u(S)^ab"""
    settings = settings or get_settings()

    def check():
        nu_ab = least_commutative(S)
        fixed = fixed_characters(S)
        rho_clif = rho_from_set(S, fixed)
        ensure(nu_ab.restrict_to_idempotents() == rho_clif, "ν_ab 在 E(S) 上的限制不等于 ρ_Clif", semigroup=S.name)
        ensure(set_from_rho(S, rho_clif) == fixed, "F_{ν_ab} ≠ Ê(S)_fix", semigroup=S.name)

        oracle_checked = S.order <= settings.nu_ab_max_size
        if oracle_checked:
            ensure(nu_ab == nu_ab_oracle(S, S.order), "最小交换同余与 ν_ab 预言机不一致", semigroup=S.name)
        enumerated = S.order <= SMALL_ORDER
        if enumerated:
            ensure(nu_ab == least_commutative_by_enumeration(S), "最小交换同余与全枚举结果不一致", semigroup=S.name)
        ensure(least_clifford(S).refines(nu_ab), "最小 Clifford 同余不包含于最小交换同余", semigroup=S.name)

        G = universal_groupoid(S)
        G_fix = g_fix(G)
        kernel_germs = pullback_selection(G_fix, G.germs_of(kernel(S, nu_ab)))
        ensure(
            kernel_germs.members == commutator_bundle(G_fix).members,
            "核芽丛不等于交换子丛", semigroup=S.name
        )

        Q, _ = quotient(S, nu_ab)
        certificate = _compare(universal_groupoid(Q), abelianize(G), budget)
        details = {"quotient_order": Q.order, "oracle_checked": oracle_checked, "enumeration_checked": enumerated}
        return certificate, details

    instance = InstanceDescriptor(semigroup=S.name, congruence="least_commutative")
    return _run(TheoremTag.ABELIANIZATION, instance, check)


def clifford_component(S: FiniteInverseSemigroup, xi: Character) -> Tuple[FiniteInverseSemigroup, Congruence]:
    """S(ξ)：S/ν_ξ 中 q(base) 所在的极大子群"""
    rho = rho_from_set(S, CharacterSet(S, frozenset({xi.base})))
    nu = nu_min(S, rho)
    Q, q = quotient(S, nu)
    top = q(xi.base)
    H = [x for x in Q.elements() if Q.source_idempotent(x) == top]
    group, _ = subsemigroup(Q, H, name=f"S({xi.name})")
    ensure(group.is_group(), "S(ξ) 不是群", semigroup=S.name, character=xi.name)
    return group, nu


def verify_clifford_structure(S: FiniteInverseSemigroup, budget: Optional[int] = None) -> TheoremReport:
    """Clifford 逆半群：嵌入 ∏ S/ν_ξ，G_u(S)_ξ ≅ S(ξ)，G_u(S) ≅ ⨿ S(ξ)"""
    if not S.is_clifford():
        raise NotCliffordError(f"{S.name} 不是 Clifford 逆半群", details={"semigroup": S.name})

    def check():
        G = universal_groupoid(S)
        chars = list(enumerate_characters(S))
        components = [clifford_component(S, xi) for xi in chars]

        signatures = {tuple(nu.class_of[s] for _, nu in components) for s in S.elements()}
        ensure(len(signatures) == S.order, "到 ∏ S/ν_ξ 的映射不是单射", semigroup=S.name)

        groups = [underlying_groupoid(group) for group, _ in components]
        for xi, group in zip(chars, groups):
            iso = isotropy_group(G, G.unit_for(xi.base))
            _compare(iso, group, budget)

        ensure(G.is_group_bundle(), "Clifford 逆半群的泛群胚不是群丛", semigroup=S.name)
        certificate = _compare(G, disjoint_union(groups, name="⨿S(ξ)"), budget)
        details = {
            "characters": [xi.name for xi in chars],
            "group_orders": [group.order for group, _ in components],
        }
        return certificate, details

    instance = InstanceDescriptor(semigroup=S.name)
    return _run(TheoremTag.CLIFFORD_STRUCTURE, instance, check)


def verify_fixed_point_bound(S: FiniteInverseSemigroup) -> TheoremReport:
    """每个单位的乘法不变集 F 上，G_u(S)_F 的不动点个数 ≤ |Hom(S, {0,1})|"""

    def check():
        G = universal_groupoid(S)
        bound = len(homs_to_two(S))
        counts = {}
        for F in enumerate_invariant_sets(S):
            n = len(fixed_units(restrict(G, G.units_for(F))))
            key = ",".join(F.names())
            ensure(n <= bound, "不动点个数超过同态个数", semigroup=S.name, characters=key, fixed=n, bound=bound)
            counts[key] = n
        certificate = {
            "bound": bound,
            "sets_checked": len(counts),
            "max_fixed_points": max(counts.values(), default=0),
            "fixed_point_counts": counts,
        }
        return certificate, {}

    instance = InstanceDescriptor(semigroup=S.name)
    return _run(TheoremTag.FIXED_POINTS, instance, check)


def verify_correspondence(S: FiniteInverseSemigroup) -> TheoremReport:
    """正规同余 ρ ↔ 单位乘法不变集 F 的一一对应，以及有限情形的稠密性"""

    def check():
        rhos = enumerate_normal_congruences(S)
        sets = enumerate_invariant_sets(S)

        pairs = []
        for rho in rhos:
            F = set_from_rho(S, rho)
            ensure(F in sets, "F_ρ 不在不变集列表中", semigroup=S.name)
            ensure(rho_from_set(S, F) == rho, "ρ_{F_ρ} ≠ ρ", semigroup=S.name, classes=rho.describe())
            pairs.append({"rho": rho.describe(), "characters": F.names()})
        for F in sets:
            ensure(set_from_rho(S, rho_from_set(S, F)) == F, "F_{ρ_F} ≠ F", semigroup=S.name, characters=F.names())
        ensure(len(rhos) == len(sets), "正规同余与不变集个数不同", semigroup=S.name)

        everything = enumerate_characters(S)
        for F in enumerate_invariant_sets(S, invariant=False):
            if separates(S, F):
                ensure(F == everything, "区分 E(S) 的单位乘法集不是全体特征", semigroup=S.name)

        ensure(
            (fixed_characters(S) == everything) == S.is_clifford(),
            "全部特征不动 ⇔ Clifford 不成立", semigroup=S.name
        )
        return {"pairs": pairs, "normal_congruences": len(rhos)}, {}

    instance = InstanceDescriptor(semigroup=S.name)
    return _run(TheoremTag.CORRESPONDENCE, instance, check)


def verify_fcis(
    alphabet: Sequence[str],
    targets: Sequence[FiniteInverseSemigroup],
    max_length: Optional[int] = None,
    seed: Optional[int] = None,
    samples: int = 20,
    name: str = "FCIS"
) -> TheoremReport:
    """FCIS(X)：特征计数、范式可靠性扫描、S(χ_A) ≅ F(A) 的样本检验"""
    settings = get_settings()
    L = settings.fcis_max_length if max_length is None else max_length
    X = sorted(set(alphabet))

    def check():
        E, subsets = fcis_idempotent_semilattice(X)
        chars = fcis_characters(X)
        ensure(len(chars) == 2 ** len(X) - 1, "特征个数不是 2^|X| − 1", alphabet=X)
        ensure(len(enumerate_characters(E)) == len(chars), "E(FCIS) 的特征个数不一致", alphabet=X)
        if len(chars) <= settings.max_bruteforce_idempotents:
            ensure(len(bruteforce_character_supports(E)) == len(chars), "暴力枚举的特征个数不一致", alphabet=X)
        ensure(fixed_characters(E) == enumerate_characters(E), "E(FCIS) 上存在非不动特征", alphabet=X)
        for A in chars:
            xi = Character(E, subsets.index(A))
            for j, C in enumerate(subsets):
                ensure(
                    fcis_evaluate_char(A, idempotent_of(C)) == evaluate(xi, j),
                    "χ_A 在 E(FCIS) 上的限制不等于 ξ_{e_A}", alphabet=X
                )

        sweep_alphabet = X[:3]
        counterexample = fcis_soundness_sweep(sweep_alphabet, L, targets)
        ensure(counterexample is None, "FCIS 范式被预言机反驳", counterexample=str(counterexample))

        rng = np.random.default_rng(settings.seed if seed is None else seed)
        checked = 0
        for A in chars:
            for _ in range(samples):
                a = fcis_from_word(random_word(rng, X, int(rng.integers(1, L + 1))))
                b = fcis_from_word(random_word(rng, X, int(rng.integers(1, L + 1))))
                ensure(
                    fcis_multiply(fcis_invert(a), a) == fcis_multiply(a, fcis_invert(a)),
                    "FCIS 元素不满足 s*s = ss*", element=a.label()
                )
                sigma_a, sigma_b = fcis_quotient_by_char(A, a), fcis_quotient_by_char(A, b)
                ensure(
                    fcis_quotient_by_char(A, fcis_multiply(a, b)) == multiply_with_zero(sigma_a, sigma_b),
                    "σ 不是同态", element=a.label()
                )
                if sigma_a is not None and sigma_b is not None:
                    ensure(
                        fcis_nu_char_related(X, A, a, b) == (sigma_a == sigma_b),
                        "σ 在顶部极大子群上不是单射", left=a.label(), right=b.label()
                    )
                elif (sigma_a is None) != (sigma_b is None):
                    ensure(not fcis_nu_char_related(X, A, a, b), "零部分与顶部极大子群相交", left=a.label(), right=b.label())
                checked += 1

            for word in enumerate_words(sorted(A), 3):
                if is_reduced(word):
                    ensure(fcis_quotient_by_char(A, fcis_from_word(word)) == word, "σ 不是到 F(A) 的满射", alphabet=X)

        certificate = {
            "characters": len(chars),
            "sweep_alphabet": sweep_alphabet,
            "sweep_max_length": L,
            "targets": [T.name for T in targets],
            "samples": checked,
        }
        return certificate, {}

    instance = InstanceDescriptor(semigroup=name, parameters={"alphabet": X})
    return _run(TheoremTag.FCIS, instance, check)


def verify_cuntz(n: int, max_length: Optional[int] = None, name: str = "Cuntz") -> TheoremReport:
    """S_n 到 {0,1} 的非零同态唯一，故 Boolean 作用至多一个不动点"""
    L = get_settings().cuntz_max_length if max_length is None else max_length

    def check():
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                expected = UNIT if i == j else ZERO
                ensure(
                    cuntz_multiply(generator_star(i, n), generator(j, n), n) == expected,
                    "Cuntz 关系 s_i* s_j = δ_ij 不成立", i=i, j=j
                )
        count = cuntz_homs_to_two(n, L)
        ensure(count == 1, "到 {0,1} 的非零同态不唯一", n=n, homs=count)
        return {"homs_to_two": count, "fixed_point_bound": count, "max_length": L}, {}

    instance = InstanceDescriptor(semigroup=name, parameters={"n": n})
    return _run(TheoremTag.CUNTZ, instance, check)


def default_fcis_targets() -> List[FiniteInverseSemigroup]:
    """内置的小 Clifford 目标"""
    two = two_element_semilattice()
    return [
        two,
        direct_product(two, two, name="{0,1}²"),
        cyclic_group(2),
        cyclic_group(3),
        adjoin_zero(cyclic_group(2), name="Z2∪{0}"),
    ]


class TheoremVerifier:
    """按语料与定理选择调度校验"""

    def __init__(self, settings: Optional[Settings] = None, budget: Optional[int] = None):
        self.settings = settings or get_settings()
        self.budget = self.settings.budget if budget is None else budget
        logger.info("定理校验服务初始化完成", extra={"budget": self.budget})

    def fcis_targets(self, entries: Iterable[LoadedCorpus]) -> List[FiniteInverseSemigroup]:
        targets = default_fcis_targets()
        names = {T.name for T in targets}
        for entry in entries:
            S = entry.semigroup
            if S is not None and S.is_clifford() and S.order <= 6 and S.name not in names:
                targets.append(S)
                names.add(S.name)
        return targets

    def verify_corpus(
        self,
        entries: Sequence[LoadedCorpus],
        theorems: Optional[Iterable[TheoremTag]] = None
    ) -> List[TheoremReport]:
        """按语料顺序输出报告"""
        selected = set(theorems) if theorems else set(TheoremTag)
        targets = self.fcis_targets(entries)
        reports: List[TheoremReport] = []
        for entry in entries:
            reports.extend(self.verify_entry(entry, selected, targets))

        verified = sum(r.verdict == Verdict.VERIFIED for r in reports)
        logger.info(
            f"语料校验完成: {verified}/{len(reports)} 通过",
            extra={"entries": len(entries), "reports": len(reports), "verified": verified}
        )
        return reports

    def verify_entry(
        self,
        entry: LoadedCorpus,
        selected: Iterable[TheoremTag],
        targets: Optional[Sequence[FiniteInverseSemigroup]] = None
    ) -> List[TheoremReport]:
        selected = set(selected)
        if entry.semigroup is None:
            return self._presented_reports(entry, selected, targets or default_fcis_targets())
        return self._finite_reports(entry, selected)

    def _presented_reports(self, entry, selected, targets) -> List[TheoremReport]:
        spec = entry.spec.presented
        if spec.family == PresentedFamily.FCIS and TheoremTag.FCIS in selected:
            return [verify_fcis(spec.alphabet, targets, name=entry.name)]
        if spec.family == PresentedFamily.CUNTZ and TheoremTag.CUNTZ in selected:
            return [verify_cuntz(spec.n, name=entry.name)]
        return []

    def main_congruences(self, entry: LoadedCorpus) -> List[Tuple[str, CongruenceSource]]:
        """主定理要校验的同余；最小同余延迟到校验内部计算"""
        S = entry.semigroup
        congruences: List[Tuple[str, CongruenceSource]] = [
            ("identity", Congruence.identity(S)),
            ("full", Congruence.full(S)),
            ("least_clifford", lambda: least_clifford(S)),
            ("least_commutative", lambda: least_commutative(S)),
        ]
        for name in entry.spec.congruences:
            congruences.append((f"pairs:{name}", close(S, resolve_pairs(S, entry.spec, name))))
        return congruences

    def _finite_reports(self, entry: LoadedCorpus, selected) -> List[TheoremReport]:
        S = entry.semigroup
        budget = self.budget
        reports: List[TheoremReport] = []

        if TheoremTag.MAIN in selected:
            for label, nu in self.main_congruences(entry):
                reports.append(verify_main_theorem(S, nu, label, budget))

        if TheoremTag.MIN_RESTRICTION in selected:
            rhos = [
                ("identity", IdempotentCongruence.identity(S)),
                ("full", IdempotentCongruence.full(S)),
                ("rho_clif", rho_from_set(S, fixed_characters(S))),
            ]
            for label, rho in rhos:
                reports.append(verify_min_restriction(S, rho, label, budget))

        if TheoremTag.CLIFFORD in selected:
            reports.append(verify_clifford_theorem(S, budget, self.settings))

        if TheoremTag.ABELIANIZATION in selected:
            reports.append(verify_abelianization_theorem(S, budget, self.settings))

        if TheoremTag.CLIFFORD_STRUCTURE in selected and S.is_clifford():
            reports.append(verify_clifford_structure(S, budget))

        enumerable = len(S.idempotents()) <= self.settings.max_enumerated_idempotents
        if not enumerable and selected & {TheoremTag.FIXED_POINTS, TheoremTag.CORRESPONDENCE}:
            logger.warning(
                f"|E(S)| 超过枚举上限，跳过不变集枚举类校验: {S.name}",
                extra={"semigroup": S.name, "idempotents": len(S.idempotents())}
            )
        if enumerable and TheoremTag.FIXED_POINTS in selected:
            reports.append(verify_fixed_point_bound(S))
        if enumerable and TheoremTag.CORRESPONDENCE in selected:
            reports.append(verify_correspondence(S))

        return reports
