"""
同余：生成对闭包、E(S) 上的正规同余、ν_{ρ,min}、商半群与核、
最小 Clifford / 交换同余、最大群像
"""
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Hashable, Iterable, Iterator, List, Mapping, Sequence, Tuple

import numpy as np

from ..core import get_logger, ensure, NotNormalError, NotIdempotentError
from .semigroup import (
    FiniteInverseSemigroup, SemigroupHom, check_hom, is_normal_subsemigroup,
    enumerate_homs, cyclic_group, adjoin_zero
)
from .union_find import UnionFind

logger = get_logger()


def _canonical(labels: Sequence[Hashable]) -> Tuple[int, ...]:
    """把任意标签规范化为“所在类的最小成员 id”"""
    first: Dict[Hashable, int] = {}
    return tuple(first.setdefault(label, i) for i, label in enumerate(labels))


@dataclass(frozen=True)
class Congruence:
    """S 上的同余，class_of[s] 为 s 所在类的最小成员"""

    semigroup: FiniteInverseSemigroup = field(compare=False, repr=False)
    class_of: Tuple[int, ...]

    @classmethod
    def from_labels(cls, S: FiniteInverseSemigroup, labels: Sequence[Hashable]) -> "Congruence":
        return cls(S, _canonical(labels))

    @classmethod
    def identity(cls, S: FiniteInverseSemigroup) -> "Congruence":
        return cls(S, tuple(S.elements()))

    @classmethod
    def full(cls, S: FiniteInverseSemigroup) -> "Congruence":
        return cls(S, (0,) * S.order)

    def related(self, s: int, t: int) -> bool:
        return self.class_of[s] == self.class_of[t]

    def classes(self) -> List[Tuple[int, ...]]:
        groups: Dict[int, List[int]] = defaultdict(list)
        for s, c in enumerate(self.class_of):
            groups[c].append(s)
        return [tuple(groups[c]) for c in sorted(groups)]

    @property
    def num_classes(self) -> int:
        return len(set(self.class_of))

    def is_identity(self) -> bool:
        return self.num_classes == len(self.class_of)

    def is_full(self) -> bool:
        return self.num_classes == 1

    def refines(self, other: "Congruence") -> bool:
        """self ⊆ other（作为关系）"""
        return all(other.class_of[s] == other.class_of[c] for s, c in enumerate(self.class_of))

    def meet(self, other: "Congruence") -> "Congruence":
        return Congruence.from_labels(self.semigroup, list(zip(self.class_of, other.class_of)))

    def is_compatible(self) -> bool:
        """左右乘法相容性；只需比较每个元素与其代表元"""
        c = np.array(self.class_of, dtype=np.int64)
        T = self.semigroup.table
        return bool(np.array_equal(c[T], c[T[c, :]]) and np.array_equal(c[T], c[T[:, c]]))

    def restrict_to_idempotents(self) -> "IdempotentCongruence":
        S = self.semigroup
        return IdempotentCongruence.from_labels(S, {e: self.class_of[e] for e in S.idempotents()})

    def describe(self) -> List[List[str]]:
        """按元素名列出各类"""
        S = self.semigroup
        return [[S.name_of(s) for s in cls] for cls in self.classes()]


@dataclass(frozen=True)
class IdempotentCongruence:
    """E(S) 上的同余；idempotents 与 class_of 对齐"""

    semigroup: FiniteInverseSemigroup = field(compare=False, repr=False)
    class_of: Tuple[int, ...]

    @classmethod
    def from_labels(cls, S: FiniteInverseSemigroup, labels: Mapping[int, Hashable]) -> "IdempotentCongruence":
        E = S.idempotents()
        first: Dict[Hashable, int] = {}
        return cls(S, tuple(first.setdefault(labels[e], e) for e in E))

    @classmethod
    def identity(cls, S: FiniteInverseSemigroup) -> "IdempotentCongruence":
        return cls(S, S.idempotents())

    @classmethod
    def full(cls, S: FiniteInverseSemigroup) -> "IdempotentCongruence":
        E = S.idempotents()
        return cls(S, (E[0],) * len(E))

    @property
    def idempotents(self) -> Tuple[int, ...]:
        return self.semigroup.idempotents()

    def cls(self, e: int) -> int:
        try:
            return self.class_of[self._position[e]]
        except KeyError:
            raise NotIdempotentError(
                f"元素 {self.semigroup.name_of(e)} 不是幂等元",
                details={"element": self.semigroup.name_of(e)}
            )

    @cached_property
    def _position(self) -> Dict[int, int]:
        return {e: i for i, e in enumerate(self.idempotents)}

    def related(self, e: int, f: int) -> bool:
        return self.cls(e) == self.cls(f)

    def members(self, e: int) -> Tuple[int, ...]:
        """e 所在的 ρ-类"""
        c = self.cls(e)
        return tuple(f for f, cf in zip(self.idempotents, self.class_of) if cf == c)

    def classes(self) -> List[Tuple[int, ...]]:
        groups: Dict[int, List[int]] = defaultdict(list)
        for e, c in zip(self.idempotents, self.class_of):
            groups[c].append(e)
        return [tuple(groups[c]) for c in sorted(groups)]

    def is_congruence(self) -> bool:
        """对 E(S) 的乘法相容"""
        S = self.semigroup
        labels = dict(zip(self.idempotents, self.class_of))
        return all(
            labels[S.mul(e, g)] == labels[S.mul(labels[e], g)]
            for e in self.idempotents
            for g in self.idempotents
        )

    def describe(self) -> List[List[str]]:
        S = self.semigroup
        return [[S.name_of(e) for e in cls] for cls in self.classes()]


def close(S: FiniteInverseSemigroup, pairs: Iterable[Tuple[int, int]]) -> Congruence:
    """包含 pairs 的最小同余（并查集 + 工作表，直到不动点）"""
    uf = UnionFind(S.order)
    worklist: deque = deque()
    for s, t in pairs:
        if uf.union(s, t):
            worklist.append((s, t))

    rows = S.table.tolist()
    merges = 0
    while worklist:
        s, t = worklist.popleft()
        merges += 1
        for a in S.elements():
            for x, y in ((rows[a][s], rows[a][t]), (rows[s][a], rows[t][a])):
                if uf.union(x, y):
                    worklist.append((x, y))

    congruence = Congruence(S, tuple(uf.canonical_labels()))
    logger.debug(
        f"同余闭包完成: {S.name}",
        extra={"semigroup": S.name, "merges": merges, "classes": congruence.num_classes}
    )
    return congruence


def join(first: Congruence, second: Congruence) -> Congruence:
    S = first.semigroup
    pairs = [(s, c) for s, c in enumerate(first.class_of)]
    pairs += [(s, c) for s, c in enumerate(second.class_of)]
    return close(S, pairs)


def is_normal_on_idempotents(S: FiniteInverseSemigroup, rho: IdempotentCongruence) -> bool:
    """(e,f) ∈ ρ 蕴含 (ses*, sfs*) ∈ ρ"""
    if not rho.is_congruence():
        return False
    for cls in rho.classes():
        for s in S.elements():
            images = {rho.cls(S.conjugate(s, e)) for e in cls}
            if len(images) > 1:
                return False
    return True


def require_normal(S: FiniteInverseSemigroup, rho: IdempotentCongruence) -> None:
    if not is_normal_on_idempotents(S, rho):
        raise NotNormalError(
            f"{S.name} 上的幂等元同余不是正规的",
            details={"semigroup": S.name, "classes": rho.describe()}
        )


def nu_min(S: FiniteInverseSemigroup, rho: IdempotentCongruence) -> Congruence:
    """限制到 E(S) 为 ρ 的最小同余 ν_{ρ,min}

    (s,t) 相关当且仅当 (s*s, t*t) ∈ ρ，且存在与 s*s 同在 ρ-类中的 e 使 se = te。
    见证 e 在整个 ρ-类中搜索。
    """
    require_normal(S, rho)

    n = S.order
    d = [S.source_idempotent(s) for s in S.elements()]
    related = np.eye(n, dtype=bool)
    for s in range(n):
        witnesses = rho.members(d[s])
        for t in range(s + 1, n):
            if rho.related(d[s], d[t]) and any(S.mul(s, e) == S.mul(t, e) for e in witnesses):
                related[s, t] = related[t, s] = True

    uf = UnionFind(n)
    for s, t in np.argwhere(related):
        uf.union(int(s), int(t))
    nu = Congruence(S, tuple(uf.canonical_labels()))

    same_class = np.array(nu.class_of)[:, None] == np.array(nu.class_of)[None, :]
    ensure(bool(np.array_equal(same_class, related)), "ν_min 关系不传递", semigroup=S.name)
    ensure(nu.is_compatible(), "ν_min 不是同余", semigroup=S.name)
    ensure(nu.restrict_to_idempotents() == rho, "ν_min 在 E(S) 上的限制不等于 ρ", semigroup=S.name)
    return nu


def quotient(S: FiniteInverseSemigroup, nu: Congruence) -> Tuple[FiniteInverseSemigroup, SemigroupHom]:
    """商半群 S/ν 及商映射 q"""
    reps = sorted(set(nu.class_of))
    index = {r: i for i, r in enumerate(reps)}
    table = [[index[nu.class_of[S.mul(r, t)]] for t in reps] for r in reps]
    inverse = [index[nu.class_of[S.inv(r)]] for r in reps]

    sizes = defaultdict(int)
    for c in nu.class_of:
        sizes[c] += 1
    names = [S.name_of(r) if sizes[r] == 1 else f"[{S.name_of(r)}]" for r in reps]

    Q = FiniteInverseSemigroup(table, inverse, names, f"{S.name}/ν")
    q = SemigroupHom(S, Q, tuple(index[c] for c in nu.class_of))
    ensure(check_hom(q), "商映射不是同态", semigroup=S.name)
    return Q, q


def kernel(S: FiniteInverseSemigroup, nu: Congruence) -> frozenset:
    """ker ν = q⁻¹(E(S/ν))"""
    Q, q = quotient(S, nu)
    members = frozenset(s for s in S.elements() if Q.is_idempotent(q(s)))
    ensure(is_normal_subsemigroup(S, members), "ker ν 不是正规子半群", semigroup=S.name)
    return members


def least_clifford(S: FiniteInverseSemigroup) -> Congruence:
    """由不动特征给出的最小 Clifford 同余 ν_{ρ_Clif,min}"""
    from .spectrum import fixed_characters, rho_from_set

    rho_clif = rho_from_set(S, fixed_characters(S))
    nu = nu_min(S, rho_clif)
    Q, _ = quotient(S, nu)
    ensure(Q.is_clifford(), "最小 Clifford 同余的商不是 Clifford 的", semigroup=S.name)
    logger.info(
        f"最小 Clifford 同余: {S.name}",
        extra={"semigroup": S.name, "classes": nu.num_classes}
    )
    return nu


def least_clifford_oracle(S: FiniteInverseSemigroup) -> Congruence:
    return close(S, [(S.source_idempotent(s), S.range_idempotent(s)) for s in S.elements()])


def least_commutative(S: FiniteInverseSemigroup) -> Congruence:
    """由全部 (st, ts) 生成的同余"""
    pairs = [(S.mul(s, t), S.mul(t, s)) for s in S.elements() for t in S.elements() if s < t]
    nu = close(S, pairs)
    Q, _ = quotient(S, nu)
    ensure(Q.is_commutative(), "最小交换同余的商不交换", semigroup=S.name)
    logger.info(
        f"最小交换同余: {S.name}",
        extra={"semigroup": S.name, "classes": nu.num_classes}
    )
    return nu


def nu_ab_oracle(S: FiniteInverseSemigroup, max_order: int) -> Congruence:
    """(s,t) 相关当且仅当所有同态 S → Z_k ∪ {0}（k ≤ max_order）在 s、t 上取值相同"""
    signatures: List[List[int]] = [[] for _ in S.elements()]
    count = 0
    for k in range(1, max_order + 1):
        target = adjoin_zero(cyclic_group(k))
        for values in enumerate_homs(S, target):
            count += 1
            for s, v in enumerate(values):
                signatures[s].append(v)

    logger.debug(
        f"ν_ab 预言机枚举完成: {S.name}",
        extra={"semigroup": S.name, "homs": count, "max_order": max_order}
    )
    return Congruence.from_labels(S, [tuple(sig) for sig in signatures])


def maximal_group_image(S: FiniteInverseSemigroup) -> Tuple[FiniteInverseSemigroup, SemigroupHom]:
    nu = nu_min(S, IdempotentCongruence.full(S))
    Q, q = quotient(S, nu)
    ensure(Q.is_group(), "最大群像不是群", semigroup=S.name)
    return Q, q


def enumerate_congruences(S: FiniteInverseSemigroup) -> List[Congruence]:
    """S 上的全部同余（主同余的并闭包）"""
    principal = {close(S, [(s, t)]) for s in S.elements() for t in S.elements() if s < t}
    found = set(principal) | {Congruence.identity(S)}
    frontier = list(found)
    while frontier:
        current = frontier.pop()
        for p in principal:
            joined = join(current, p)
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    return sorted(found, key=lambda c: (-c.num_classes, c.class_of))


def least_clifford_by_enumeration(S: FiniteInverseSemigroup) -> Congruence:
    """商为 Clifford 的全部同余之交"""
    result = Congruence.full(S)
    for nu in enumerate_congruences(S):
        Q, _ = quotient(S, nu)
        if Q.is_clifford():
            result = result.meet(nu)
    return result


def least_commutative_by_enumeration(S: FiniteInverseSemigroup) -> Congruence:
    """商交换的全部同余之交"""
    result = Congruence.full(S)
    for nu in enumerate_congruences(S):
        Q, _ = quotient(S, nu)
        if Q.is_commutative():
            result = result.meet(nu)
    return result


def _set_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [[head]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[head] + partition[i]] + partition[i + 1:]


def enumerate_normal_congruences(S: FiniteInverseSemigroup) -> List[IdempotentCongruence]:
    """E(S) 上全部正规同余（枚举集合划分后筛选）"""
    result = []
    for partition in _set_partitions(list(S.idempotents())):
        labels = {e: i for i, block in enumerate(partition) for e in block}
        rho = IdempotentCongruence.from_labels(S, labels)
        if is_normal_on_idempotents(S, rho):
            result.append(rho)
    return result


def factors_through(nu: Congruence, h: SemigroupHom) -> bool:
    """h 在 ν 的每个类上取常值（即 h 经商映射分解）"""
    return all(h(s) == h(c) for s, c in enumerate(nu.class_of))
