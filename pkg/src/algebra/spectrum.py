"""
特征谱：E(S) 上的特征、谱作用、不动特征、不变集与 ρ ↔ F 对应
"""
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import FrozenSet, Iterable, Iterator, List, Optional

import numpy as np

from ..core import (
    get_logger, get_settings, ensure,
    NotIdempotentError, OutsideDomainError, NotInvariantError, ConfigurationError
)
from .semigroup import FiniteInverseSemigroup, SemigroupHom, check_hom, enumerate_homs, two_element_semilattice
from .congruence import Congruence, IdempotentCongruence, is_normal_on_idempotents, quotient, require_normal

logger = get_logger()


@dataclass(frozen=True)
class Character:
    """有限半格上的特征 ξ_e：f ↦ 1 当且仅当 f ≥ e"""

    semigroup: FiniteInverseSemigroup = field(compare=False, repr=False)
    base: int

    def __post_init__(self):
        if not self.semigroup.is_idempotent(self.base):
            raise NotIdempotentError(
                f"特征的基点 {self.semigroup.name_of(self.base)} 不是幂等元",
                details={"element": self.semigroup.name_of(self.base)}
            )

    def __call__(self, f: int) -> int:
        return evaluate(self, f)

    @property
    def name(self) -> str:
        return f"ξ_{self.semigroup.name_of(self.base)}"

    def support(self) -> FrozenSet[int]:
        return self.semigroup.up_set(self.base)


@dataclass(frozen=True)
class CharacterSet:
    """特征集合，以基点幂等元表示"""

    semigroup: FiniteInverseSemigroup = field(compare=False, repr=False)
    members: FrozenSet[int]

    def __contains__(self, item) -> bool:
        base = item.base if isinstance(item, Character) else item
        return base in self.members

    def __iter__(self) -> Iterator[Character]:
        return (Character(self.semigroup, b) for b in sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def bases(self) -> tuple:
        return tuple(sorted(self.members))

    def names(self) -> List[str]:
        return sorted(self.semigroup.name_of(b) for b in self.members)


@dataclass(frozen=True)
class SetFlags:
    unital: bool
    multiplicative: bool
    invariant: bool

    @property
    def admissible(self) -> bool:
        """单位的、乘法封闭的不变集"""
        return self.unital and self.multiplicative and self.invariant


def evaluate(xi: Character, f: int) -> int:
    S = xi.semigroup
    if not S.is_idempotent(f):
        raise NotIdempotentError(
            f"特征只能在幂等元上取值，{S.name_of(f)} 不是幂等元",
            details={"element": S.name_of(f)}
        )
    return 1 if S.mul(xi.base, f) == xi.base else 0


def enumerate_characters(S: FiniteInverseSemigroup) -> CharacterSet:
    return CharacterSet(S, frozenset(S.idempotents()))


def constant_one(S: FiniteInverseSemigroup) -> Character:
    """常值 1 特征，其基点为 E(S) 的最小元"""
    return Character(S, S.minimum_idempotent)


def bruteforce_character_supports(S: FiniteInverseSemigroup, limit: Optional[int] = None) -> List[FrozenSet[int]]:
    """穷举全部非零乘法映射 E(S) → {0,1}，返回各映射的支撑集"""
    limit = get_settings().max_bruteforce_idempotents if limit is None else limit
    E = list(S.idempotents())
    k = len(E)
    if k > limit:
        raise ConfigurationError(
            f"|E(S)| = {k} 超过暴力枚举上限 {limit}",
            details={"semigroup": S.name, "idempotents": k}
        )

    position = {e: i for i, e in enumerate(E)}
    prod = np.array([[position[S.mul(e, f)] for f in E] for e in E], dtype=np.int64)
    masks = np.array(list(cartesian((0, 1), repeat=k)), dtype=np.int64)
    values = masks[:, prod]
    expected = masks[:, :, None] & masks[:, None, :]
    ok = np.all(values == expected, axis=(1, 2)) & (masks.sum(axis=1) > 0)

    return [frozenset(E[i] for i in np.flatnonzero(row)) for row in masks[ok]]


def character_from_support(S: FiniteInverseSemigroup, support: Iterable[int]) -> Character:
    """支撑集必须是某个 up(e)"""
    support = frozenset(support)
    base = S.meet(support)
    ensure(S.up_set(base) == support, "支撑集不是主滤子", semigroup=S.name)
    return Character(S, base)


def spectral_action(S: FiniteInverseSemigroup, s: int, xi: Character) -> Character:
    """β_s(ξ)(e) = ξ(s*es)，通过基点共轭 s·base·s* 计算"""
    if evaluate(xi, S.source_idempotent(s)) == 0:
        raise OutsideDomainError(
            f"{xi.name} 不在 {S.name_of(s)} 的定义域内",
            details={"element": S.name_of(s), "character": xi.name}
        )
    moved = Character(S, S.conjugate(s, xi.base))

    if __debug__:
        s_star = S.inv(s)
        for e in S.idempotents():
            ensure(
                evaluate(xi, S.conjugate(s_star, e)) == evaluate(moved, e),
                "谱作用的共轭公式与逐点定义不一致",
                element=S.name_of(s), idempotent=S.name_of(e)
            )
    return moved


def is_fixed(S: FiniteInverseSemigroup, xi: Character) -> bool:
    """ξ(s*s) = 1 时 ξ(s*es) = ξ(e) 对全部 e 成立"""
    for s in S.elements():
        if evaluate(xi, S.source_idempotent(s)) == 0:
            continue
        s_star = S.inv(s)
        if any(evaluate(xi, S.conjugate(s_star, e)) != evaluate(xi, e) for e in S.idempotents()):
            return False
    return True


def fixed_characters(S: FiniteInverseSemigroup) -> CharacterSet:
    return CharacterSet(S, frozenset(xi.base for xi in enumerate_characters(S) if is_fixed(S, xi)))


def extend_to_hom(S: FiniteInverseSemigroup, xi: Character) -> SemigroupHom:
    """不动特征延拓为同态 s ↦ ξ(s*s)"""
    T = two_element_semilattice()
    return SemigroupHom(S, T, tuple(evaluate(xi, S.source_idempotent(s)) for s in S.elements()))


def homs_to_two(S: FiniteInverseSemigroup) -> List[SemigroupHom]:
    """全部非零同态 S → {0,1}，并检查它们与不动特征一一对应"""
    T = two_element_semilattice()
    homs = [SemigroupHom(S, T, values) for values in enumerate_homs(S, T) if any(values)]

    fixed = fixed_characters(S)
    restricted = set()
    for h in homs:
        xi = character_from_support(S, (e for e in S.idempotents() if h(e) == 1))
        ensure(xi in fixed, "同态在 E(S) 上的限制不是不动特征", semigroup=S.name, character=xi.name)
        ensure(extend_to_hom(S, xi).map == h.map, "同态不由其在 E(S) 上的限制唯一决定", semigroup=S.name)
        restricted.add(xi.base)

    for xi in fixed:
        ensure(check_hom(extend_to_hom(S, xi)), "不动特征的延拓不是同态", semigroup=S.name, character=xi.name)
    ensure(restricted == set(fixed.members), "同态与不动特征不一一对应", semigroup=S.name)
    return homs


def character_product(xi: Character, eta: Character) -> Optional[Character]:
    """逐点乘积；支撑集为空（零映射）时返回 None"""
    S = xi.semigroup
    support = xi.support() & eta.support()
    if not support:
        return None
    return character_from_support(S, support)


def classify_set(S: FiniteInverseSemigroup, F: CharacterSet) -> SetFlags:
    unital = S.minimum_idempotent in F

    multiplicative = True
    for xi in F:
        for eta in F:
            prod = character_product(xi, eta)
            if prod is not None and prod not in F:
                multiplicative = False
                break
        if not multiplicative:
            break

    invariant = all(
        spectral_action(S, s, xi) in F
        for xi in F
        for s in S.elements()
        if evaluate(xi, S.source_idempotent(s)) == 1
    )
    return SetFlags(unital=unital, multiplicative=multiplicative, invariant=invariant)


def rho_from_set(S: FiniteInverseSemigroup, F: CharacterSet) -> IdempotentCongruence:
    """ρ_F：(e,f) 相关当且仅当 F 中所有特征在 e、f 上取值相同"""
    if not classify_set(S, F).invariant:
        raise NotInvariantError(
            f"{S.name} 上的特征集合不是不变集",
            details={"semigroup": S.name, "characters": F.names()}
        )
    chars = list(F)
    labels = {e: tuple(evaluate(xi, e) for xi in chars) for e in S.idempotents()}
    rho = IdempotentCongruence.from_labels(S, labels)
    ensure(is_normal_on_idempotents(S, rho), "ρ_F 不是正规同余", semigroup=S.name)
    return rho


def set_from_rho(S: FiniteInverseSemigroup, rho: IdempotentCongruence) -> CharacterSet:
    """F_ρ：E(S)/ρ 上的特征沿商映射拉回"""
    require_normal(S, rho)

    bases = set()
    for c in {rho.cls(e) for e in S.idempotents()}:
        # η_c 拉回后的支撑集为 {f : c ≤ [f]}
        support = [f for f in S.idempotents() if rho.cls(S.mul(c, f)) == c]
        bases.add(character_from_support(S, support).base)

    F = CharacterSet(S, frozenset(bases))
    flags = classify_set(S, F)
    ensure(flags.admissible, "F_ρ 不是单位的乘法不变集", semigroup=S.name, flags=str(flags))
    return F


def pullback_characters(S: FiniteInverseSemigroup, nu: Congruence) -> CharacterSet:
    """直接在 S/ν 上枚举特征再拉回，用作 F_ν 的对照"""
    Q, q = quotient(S, nu)
    bases = set()
    for b in Q.idempotents():
        support = [f for f in S.idempotents() if Q.natural_order_leq(b, q(f))]
        bases.add(character_from_support(S, support).base)
    return CharacterSet(S, frozenset(bases))


def enumerate_invariant_sets(
    S: FiniteInverseSemigroup,
    unital: bool = True,
    multiplicative: bool = True,
    invariant: bool = True,
    limit: Optional[int] = None
) -> List[CharacterSet]:
    """穷举满足所选条件的特征集合"""
    limit = get_settings().max_enumerated_idempotents if limit is None else limit
    E = S.idempotents()
    if len(E) > limit:
        raise ConfigurationError(
            f"|E(S)| = {len(E)} 超过子集枚举上限 {limit}",
            details={"semigroup": S.name, "idempotents": len(E)}
        )

    result = []
    for mask in cartesian((False, True), repeat=len(E)):
        F = CharacterSet(S, frozenset(e for e, keep in zip(E, mask) if keep))
        flags = classify_set(S, F)
        if invariant and not flags.invariant:
            continue
        if unital and not flags.unital:
            continue
        if multiplicative and not flags.multiplicative:
            continue
        result.append(F)
    return result


def separates(S: FiniteInverseSemigroup, F: CharacterSet) -> bool:
    """F 区分 E(S) 中任意两点"""
    chars = list(F)
    signatures = {tuple(evaluate(xi, e) for xi in chars) for e in S.idempotents()}
    return len(signatures) == len(S.idempotents())
