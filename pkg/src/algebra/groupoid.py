"""
有限群胚：泛群胚（芽群胚）构造、限制、正规子群胚与商、同态核、
不动点、交换子丛与 G^ab
"""
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..core import (
    get_logger, ensure,
    NotInvariantSetError, NotSubgroupoidError, NotNormalError,
    NotInjectiveOnUnitsError, NotGroupBundleError, OutsideDomainError
)
from .semigroup import FiniteInverseSemigroup
from .spectrum import Character, CharacterSet, spectral_action
from .union_find import UnionFind

logger = get_logger()

# 复合表中“无定义”的编码
UNDEFINED = -1


class FiniteGroupoid:
    """有限（离散）群胚，复合表完全物化

    compose[α][β] 当且仅当 d(α) = r(β) 时有定义，值为 αβ（先 β 后 α）。
    origin 记录子群胚中每个箭头在父群胚中的 id。
    """

    def __init__(
        self,
        labels: Sequence[str],
        units: Iterable[int],
        source: Sequence[int],
        range_: Sequence[int],
        compose: Sequence[Sequence[int]],
        invert: Sequence[int],
        origin: Optional[Sequence[int]] = None,
        name: str = "G"
    ):
        self.labels: Tuple[str, ...] = tuple(labels)
        self.units: FrozenSet[int] = frozenset(units)
        self.source: Tuple[int, ...] = tuple(source)
        self.range: Tuple[int, ...] = tuple(range_)
        self.inverse: Tuple[int, ...] = tuple(invert)
        self.origin: Optional[Tuple[int, ...]] = tuple(origin) if origin is not None else None
        self.name = name

        m = len(self.labels)
        table = np.array(compose, dtype=np.int64).reshape(m, m)
        table.setflags(write=False)
        self.compose_table = table
        self._compose: List[List[int]] = table.tolist()

    @classmethod
    def from_structure(
        cls,
        keys: Sequence[Hashable],
        is_unit: Callable[[Any], bool],
        source: Callable[[Any], Hashable],
        range_: Callable[[Any], Hashable],
        multiply: Callable[[Any, Any], Hashable],
        inverse: Callable[[Any], Hashable],
        label: Callable[[Any], str],
        name: str = "G",
        **extra
    ) -> "FiniteGroupoid":
        """由箭头键及结构映射物化群胚"""
        index = {k: i for i, k in enumerate(keys)}
        m = len(keys)
        src = [index[source(k)] for k in keys]
        rng = [index[range_(k)] for k in keys]
        table = [[UNDEFINED] * m for _ in range(m)]
        for i, a in enumerate(keys):
            for j, b in enumerate(keys):
                if src[i] == rng[j]:
                    table[i][j] = index[multiply(a, b)]
        return cls(
            labels=[label(k) for k in keys],
            units=[index[k] for k in keys if is_unit(k)],
            source=src,
            range_=rng,
            compose=table,
            invert=[index[inverse(k)] for k in keys],
            name=name,
            **extra
        )

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, arrows={len(self)}, units={len(self.units)})"

    def arrows(self) -> range:
        return range(len(self.labels))

    def compose(self, a: int, b: int) -> Optional[int]:
        value = self._compose[a][b]
        return None if value == UNDEFINED else value

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def is_unit(self, a: int) -> bool:
        return a in self.units

    def unit_ids(self) -> Tuple[int, ...]:
        return tuple(sorted(self.units))

    def fiber(self, x: int) -> Tuple[int, ...]:
        """x 处的迷向群 G_x^x"""
        return tuple(a for a in self.arrows() if self.source[a] == x and self.range[a] == x)

    def composable_pairs(self) -> Iterator[Tuple[int, int]]:
        for a, b in np.argwhere(self.compose_table != UNDEFINED):
            yield int(a), int(b)

    def check_axioms(self) -> None:
        """逐条检查群胚公理，失败时抛出 InvariantViolationError"""
        for x in self.units:
            ensure(self.source[x] == x and self.range[x] == x, "单位的源与靶必须是自身", arrow=self.labels[x])
        for a in self.arrows():
            ensure(self.source[a] in self.units and self.range[a] in self.units, "源或靶不是单位", arrow=self.labels[a])
            ensure(self.compose(self.range[a], a) == a and self.compose(a, self.source[a]) == a, "单位律不成立", arrow=self.labels[a])
            a_inv = self.inverse[a]
            ensure(
                self.compose(a_inv, a) == self.source[a] and self.compose(a, a_inv) == self.range[a],
                "逆元律不成立", arrow=self.labels[a]
            )

        src = np.array(self.source)
        rng = np.array(self.range)
        defined = self.compose_table != UNDEFINED
        ensure(bool(np.array_equal(defined, src[:, None] == rng[None, :])), "复合的定义域与 d(α) = r(β) 不一致")

        for a, b in self.composable_pairs():
            ab = self._compose[a][b]
            ensure(self.source[ab] == self.source[b] and self.range[ab] == self.range[a], "复合的源靶不正确")
            for c in self.arrows():
                if self.source[b] == self.range[c]:
                    ensure(
                        self._compose[ab][c] == self._compose[a][self._compose[b][c]],
                        "结合律不成立", arrows=[self.labels[a], self.labels[b], self.labels[c]]
                    )

    def orbits(self) -> List[FrozenSet[int]]:
        """单位空间的轨道分解"""
        uf = UnionFind(len(self))
        for a in self.arrows():
            uf.union(self.source[a], self.range[a])
        groups: Dict[int, List[int]] = defaultdict(list)
        for x in self.unit_ids():
            groups[uf.find(x)].append(x)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    def is_group_bundle(self) -> bool:
        return all(self.source[a] == self.range[a] for a in self.arrows())

    def is_abelian_bundle(self) -> bool:
        """每个迷向群都交换"""
        for x in self.unit_ids():
            fiber = self.fiber(x)
            if any(self._compose[a][b] != self._compose[b][a] for a, b in combinations(fiber, 2)):
                return False
        return True


@dataclass(frozen=True)
class Germ:
    """芽 [s, ξ_e] 的代表元，要求 e ≤ s*s"""

    element: int
    base: int


def canonical_germ(S: FiniteInverseSemigroup, s: int, e: int) -> Germ:
    """规范代表 (se, e)"""
    return Germ(S.mul(s, e), e)


def germs_equal(S: FiniteInverseSemigroup, g: Germ, h: Germ) -> bool:
    """芽相等的定义：基点相同，且存在 f ≥ e 使 sf = tf"""
    if g.base != h.base:
        return False
    return any(S.mul(g.element, f) == S.mul(h.element, f) for f in S.up_set(g.base))


class UniversalGroupoid(FiniteGroupoid):
    """G_u(S)：谱作用的芽群胚，记住每个箭头对应的规范芽"""

    def __init__(self, *, semigroup: FiniteInverseSemigroup, germs: Sequence[Germ], **kwargs):
        super().__init__(**kwargs)
        self.semigroup = semigroup
        self.germs: Tuple[Germ, ...] = tuple(germs)
        self._germ_index = {g: i for i, g in enumerate(self.germs)}

    def germ_arrow(self, s: int, e: int) -> int:
        """芽 [s, ξ_e] 对应的箭头 id"""
        S = self.semigroup
        if not S.natural_order_leq(e, S.source_idempotent(s)):
            raise OutsideDomainError(
                f"ξ_{S.name_of(e)} 不在 {S.name_of(s)} 的定义域内",
                details={"element": S.name_of(s), "base": S.name_of(e)}
            )
        return self._germ_index[canonical_germ(S, s, e)]

    def unit_for(self, e: int) -> int:
        return self.germ_arrow(e, e)

    def unit_base(self, x: int) -> int:
        return self.germs[x].base

    def units_for(self, F: CharacterSet) -> FrozenSet[int]:
        return frozenset(self.unit_for(b) for b in F.members)

    def germs_of(self, elements: Iterable[int]) -> FrozenSet[int]:
        """{[n, ξ] : n ∈ elements, ξ ∈ D_n}"""
        S = self.semigroup
        result = set()
        for n in elements:
            d = S.source_idempotent(n)
            for e in S.idempotents():
                if S.mul(e, d) == e:
                    result.add(self.germ_arrow(n, e))
        return frozenset(result)


def _germ_label(S: FiniteInverseSemigroup, g: Germ) -> str:
    return f"[{S.name_of(g.element)},ξ_{S.name_of(g.base)}]"


def universal_groupoid(S: FiniteInverseSemigroup) -> UniversalGroupoid:
    """G_u(S) = S ⋉ Ê(S)

    芽的相等按定义逐一判定；规范代表 (se, e) 仅在校验与定义一致后用于索引。
    """
    E = S.idempotents()
    reps = [
        Germ(s, e)
        for s in S.elements()
        for e in E
        if S.natural_order_leq(e, S.source_idempotent(s))
    ]

    uf = UnionFind(len(reps))
    by_base: Dict[int, List[int]] = defaultdict(list)
    for i, g in enumerate(reps):
        by_base[g.base].append(i)
    for indices in by_base.values():
        for i, j in combinations(indices, 2):
            if germs_equal(S, reps[i], reps[j]):
                uf.union(i, j)

    classes: Dict[int, set] = defaultdict(set)
    for i, g in enumerate(reps):
        classes[uf.find(i)].add(canonical_germ(S, g.element, g.base))
    for canon in classes.values():
        ensure(len(canon) == 1, "同一芽类的规范代表不唯一", semigroup=S.name)
    keys = sorted((next(iter(c)) for c in classes.values()), key=lambda g: (g.element, g.base))
    ensure(len(set(keys)) == len(keys), "不同芽类的规范代表相同", semigroup=S.name)
    ensure(len(keys) == S.order, "芽的个数不等于 |S|", semigroup=S.name, germs=len(keys))

    def range_germ(g: Germ) -> Germ:
        r = spectral_action(S, g.element, Character(S, g.base)).base
        return Germ(r, r)

    G = UniversalGroupoid.from_structure(
        keys,
        is_unit=lambda g: g.element == g.base,
        source=lambda g: Germ(g.base, g.base),
        range_=range_germ,
        multiply=lambda a, b: canonical_germ(S, S.mul(a.element, b.element), b.base),
        inverse=lambda g: canonical_germ(S, S.inv(g.element), range_germ(g).base),
        label=lambda g: _germ_label(S, g),
        name=f"G_u({S.name})",
        semigroup=S,
        germs=keys
    )
    if __debug__:
        G.check_axioms()

    logger.info(
        f"泛群胚构造完成: {G.name}",
        extra={"semigroup": S.name, "arrows": len(G), "units": len(G.units)}
    )
    return G


def underlying_groupoid(S: FiniteInverseSemigroup) -> FiniteGroupoid:
    """箭头为 S 的元素，d(s) = s*s，r(s) = ss*，s*s = tt* 时复合为 st"""
    return FiniteGroupoid.from_structure(
        list(S.elements()),
        is_unit=S.is_idempotent,
        source=S.source_idempotent,
        range_=S.range_idempotent,
        multiply=S.mul,
        inverse=S.inv,
        label=S.name_of,
        name=f"G({S.name})"
    )


@dataclass(frozen=True)
class SubgroupoidSelection:
    """父群胚中的一组箭头"""

    parent: FiniteGroupoid = field(compare=False, repr=False)
    members: FrozenSet[int]

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def is_subgroupoid(self) -> bool:
        G = self.parent
        if any(G.inv(a) not in self.members for a in self.members):
            return False
        for a in self.members:
            for b in self.members:
                ab = G.compose(a, b)
                if ab is not None and ab not in self.members:
                    return False
        return True


def subgroupoid(G: FiniteGroupoid, members: Iterable[int], name: Optional[str] = None) -> FiniteGroupoid:
    """把子群胚重新编号为独立的群胚，origin 指回 G"""
    selection = SubgroupoidSelection(G, frozenset(members))
    if not selection.is_subgroupoid():
        raise NotSubgroupoidError(
            f"所选箭头在 {G.name} 中不构成子群胚",
            details={"groupoid": G.name, "arrows": len(selection)}
        )

    kept = sorted(selection.members)
    index = {a: i for i, a in enumerate(kept)}
    table = [
        [index[G.compose(a, b)] if G.compose(a, b) is not None else UNDEFINED for b in kept]
        for a in kept
    ]
    return FiniteGroupoid(
        labels=[G.labels[a] for a in kept],
        units=[index[a] for a in kept if a in G.units],
        source=[index[G.source[a]] for a in kept],
        range_=[index[G.range[a]] for a in kept],
        compose=table,
        invert=[index[G.inv(a)] for a in kept],
        origin=kept,
        name=name or f"{G.name}'"
    )


def restrict(G: FiniteGroupoid, units: Iterable[int], name: Optional[str] = None) -> FiniteGroupoid:
    """G_U = d⁻¹(U)，要求 U 是不变集"""
    U = frozenset(units)
    if not U <= G.units:
        raise NotInvariantSetError(
            "限制集合中含有非单位箭头",
            details={"groupoid": G.name, "arrows": sorted(G.labels[a] for a in U - G.units)}
        )
    for a in G.arrows():
        if G.source[a] in U and G.range[a] not in U:
            raise NotInvariantSetError(
                f"单位集合在 {G.name} 中不是不变集",
                details={"groupoid": G.name, "arrow": G.labels[a]}
            )
    return subgroupoid(G, (a for a in G.arrows() if G.source[a] in U), name=name or f"{G.name}|U")


def iso_bundle(G: FiniteGroupoid) -> SubgroupoidSelection:
    return SubgroupoidSelection(G, frozenset(a for a in G.arrows() if G.source[a] == G.range[a]))


def is_normal_subgroupoid(G: FiniteGroupoid, H: SubgroupoidSelection) -> bool:
    """G^(0) ⊂ H ⊂ Iso(G) 且 αHα⁻¹ ⊂ H"""
    if not H.is_subgroupoid():
        raise NotSubgroupoidError(
            f"所选箭头在 {G.name} 中不构成子群胚",
            details={"groupoid": G.name}
        )
    if not G.units <= H.members:
        return False
    if not H.members <= iso_bundle(G).members:
        return False
    for a in G.arrows():
        for h in H.members:
            if G.source[h] != G.source[a]:
                continue
            conjugated = G.compose(G.compose(a, h), G.inv(a))
            if conjugated not in H.members:
                return False
    return True


def quotient_groupoid(G: FiniteGroupoid, H: SubgroupoidSelection) -> Tuple[FiniteGroupoid, Tuple[int, ...]]:
    """G/H：α ∼ β 当且仅当 d(α) = d(β) 且 αβ⁻¹ ∈ H"""
    if not is_normal_subgroupoid(G, H):
        raise NotNormalError(
            f"{G.name} 的子群胚不是正规的",
            details={"groupoid": G.name}
        )

    uf = UnionFind(len(G))
    for a, b in combinations(G.arrows(), 2):
        if G.source[a] == G.source[b] and G.compose(a, G.inv(b)) in H.members:
            uf.union(a, b)
    label = uf.canonical_labels()

    reps = sorted(set(label))
    index = {r: i for i, r in enumerate(reps)}
    sizes: Dict[int, int] = defaultdict(int)
    for c in label:
        sizes[c] += 1

    def cls(a: int) -> int:
        return index[label[a]]

    m = len(reps)
    table = [[UNDEFINED] * m for _ in range(m)]
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            ab = G.compose(a, b)
            if ab is not None:
                table[i][j] = cls(ab)

    Q = FiniteGroupoid(
        labels=[G.labels[r] if sizes[r] == 1 else f"[{G.labels[r]}]" for r in reps],
        units=[cls(x) for x in G.units],
        source=[cls(G.source[r]) for r in reps],
        range_=[cls(G.range[r]) for r in reps],
        compose=table,
        invert=[cls(G.inv(r)) for r in reps],
        name=f"{G.name}/H"
    )
    projection = tuple(cls(a) for a in G.arrows())
    ensure(GroupoidHom(G, Q, projection).is_functor(), "商投影不是群胚同态", groupoid=G.name)
    return Q, projection


@dataclass(frozen=True)
class GroupoidHom:
    source: FiniteGroupoid
    target: FiniteGroupoid
    map: Tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    def is_functor(self) -> bool:
        G, H, f = self.source, self.target, self.map
        if len(f) != len(G):
            return False
        if any(f[x] not in H.units for x in G.units):
            return False
        for a in G.arrows():
            if H.source[f[a]] != f[G.source[a]] or H.range[f[a]] != f[G.range[a]]:
                return False
        return all(H.compose(f[a], f[b]) == f[G.compose(a, b)] for a, b in G.composable_pairs())


def induced_isomorphism(phi: GroupoidHom, K: SubgroupoidSelection) -> Tuple[FiniteGroupoid, Tuple[int, ...]]:
    """同态基本定理：G/ker Φ 到像的诱导映射是单的函子"""
    Q, projection = quotient_groupoid(phi.source, K)
    induced: List[Optional[int]] = [None] * len(Q)
    for a, c in enumerate(projection):
        if induced[c] is None:
            induced[c] = phi(a)
        else:
            ensure(induced[c] == phi(a), "诱导映射不是良定义的", groupoid=phi.source.name)
    result = tuple(induced)
    ensure(len(set(result)) == len(result), "诱导映射不是单射", groupoid=phi.source.name)
    ensure(GroupoidHom(Q, phi.target, result).is_functor(), "诱导映射不是群胚同态", groupoid=phi.source.name)
    return Q, result


def kernel_of_hom(phi: GroupoidHom) -> SubgroupoidSelection:
    """ker Φ = Φ⁻¹(H^(0))"""
    G, H = phi.source, phi.target
    ensure(phi.is_functor(), "Φ 不是群胚同态", groupoid=G.name)

    unit_images = [phi(x) for x in G.unit_ids()]
    if len(set(unit_images)) != len(unit_images):
        raise NotInjectiveOnUnitsError(
            f"{G.name} → {H.name} 在单位空间上不单",
            details={"source": G.name, "target": H.name}
        )

    K = SubgroupoidSelection(G, frozenset(a for a in G.arrows() if phi(a) in H.units))
    ensure(is_normal_subgroupoid(G, K), "ker Φ 不是正规子群胚", groupoid=G.name)
    induced_isomorphism(phi, K)
    return K


def fixed_units(G: FiniteGroupoid) -> FrozenSet[int]:
    """所有从 x 出发的箭头都回到 x 的单位"""
    moved = {G.source[a] for a in G.arrows() if G.source[a] != G.range[a]}
    return frozenset(G.units - moved)


def g_fix(G: FiniteGroupoid) -> FiniteGroupoid:
    F = restrict(G, fixed_units(G), name=f"{G.name}_fix")
    ensure(F.is_group_bundle(), "不动点限制不是群丛", groupoid=G.name)
    return F


def isotropy_group(G: FiniteGroupoid, x: int) -> FiniteGroupoid:
    ensure(x in G.units, "迷向群的基点必须是单位", groupoid=G.name)
    return subgroupoid(G, G.fiber(x), name=f"{G.name}_{G.labels[x]}")


def commutator_bundle(G: FiniteGroupoid) -> SubgroupoidSelection:
    """逐纤维的交换子群 [G_x, G_x]"""
    if not G.is_group_bundle():
        raise NotGroupBundleError(
            f"{G.name} 不是群丛",
            details={"groupoid": G.name}
        )

    members = set()
    for x in G.unit_ids():
        fiber = G.fiber(x)
        generated = {
            G.compose(G.compose(G.compose(a, b), G.inv(a)), G.inv(b))
            for a in fiber
            for b in fiber
        }
        frontier = list(generated)
        while frontier:
            g = frontier.pop()
            for h in list(generated):
                for p in (G.compose(g, h), G.compose(h, g)):
                    if p not in generated:
                        generated.add(p)
                        frontier.append(p)
        members |= generated
    return SubgroupoidSelection(G, frozenset(members))


def abelianize(G: FiniteGroupoid) -> FiniteGroupoid:
    """G^ab = G_fix / [G_fix, G_fix]"""
    F = g_fix(G)
    Q, _ = quotient_groupoid(F, commutator_bundle(F))
    Q.name = f"{G.name}^ab"
    ensure(Q.is_abelian_bundle(), "G^ab 的迷向群不交换", groupoid=G.name)
    return Q


def disjoint_union(groupoids: Sequence[FiniteGroupoid], name: str = "⨿") -> FiniteGroupoid:
    labels: List[str] = []
    units: List[int] = []
    source: List[int] = []
    range_: List[int] = []
    invert: List[int] = []
    blocks = []
    offset = 0
    for G in groupoids:
        labels += [f"{G.name}:{label}" for label in G.labels]
        units += [offset + x for x in G.units]
        source += [offset + x for x in G.source]
        range_ += [offset + x for x in G.range]
        invert += [offset + x for x in G.inverse]
        blocks.append((offset, G))
        offset += len(G)

    table = [[UNDEFINED] * offset for _ in range(offset)]
    for start, G in blocks:
        for a, b in G.composable_pairs():
            table[start + a][start + b] = start + G.compose(a, b)
    return FiniteGroupoid(labels, units, source, range_, table, invert, name=name)


def pullback_selection(G: FiniteGroupoid, parent_members: Iterable[int]) -> SubgroupoidSelection:
    """G 为子群胚时，把父群胚中的箭头集合拉回到 G"""
    ensure(G.origin is not None, "群胚没有父群胚", groupoid=G.name)
    wanted = frozenset(parent_members)
    return SubgroupoidSelection(G, frozenset(i for i, p in enumerate(G.origin) if p in wanted))
