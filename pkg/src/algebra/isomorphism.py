"""
有限群胚同构判定：先比较不变量，再逐连通分支匹配迷向群并拼装箭头双射
"""
from collections import Counter, deque
from dataclasses import dataclass
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from ..core import get_logger, get_settings, ensure, SearchBudgetExceededError
from .groupoid import FiniteGroupoid

logger = get_logger()


@dataclass(frozen=True)
class IsomorphismResult:
    """同构证书（G1 → G2 的箭头双射）或区分两者的不变量"""

    isomorphic: bool
    certificate: Optional[Tuple[int, ...]] = None
    refutation: Optional[str] = None
    nodes: int = 0


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise SearchBudgetExceededError(
                f"同构搜索超过节点上限 {self.limit}",
                details={"budget": self.limit}
            )


@dataclass(frozen=True)
class _Component:
    base: int
    units: Tuple[int, ...]
    transversal: Dict[int, int]  # y ↦ 从 base 到 y 的箭头
    fiber: Tuple[int, ...]
    invariant: tuple


def element_order(G: FiniteGroupoid, a: int) -> int:
    """迷向箭头的阶"""
    unit = G.source[a]
    power, k = a, 1
    while power != unit:
        power = G.compose(power, a)
        k += 1
    return k


def _components(G: FiniteGroupoid) -> List[_Component]:
    result = []
    for orbit in G.orbits():
        base = min(orbit)
        transversal = {base: base}
        queue = deque([base])
        while queue:
            y = queue.popleft()
            for a in G.arrows():
                if G.source[a] == y and G.range[a] not in transversal:
                    transversal[G.range[a]] = G.compose(a, transversal[y])
                    queue.append(G.range[a])
        fiber = G.fiber(base)
        orders = [element_order(G, a) for a in fiber]
        invariant = (
            len(orbit),
            len(fiber),
            lcm(*orders),
            tuple(sorted(Counter(orders).items()))
        )
        result.append(_Component(base, tuple(sorted(orbit)), transversal, fiber, invariant))
    return result


def _refute(G1: FiniteGroupoid, G2: FiniteGroupoid, c1: List[_Component], c2: List[_Component]) -> Optional[str]:
    """按由粗到细的顺序比较不变量，返回第一个不一致项"""
    if len(G1) != len(G2):
        return "arrow_count"
    if len(G1.units) != len(G2.units):
        return "unit_count"
    checks = [
        ("orbit_sizes", lambda c: c.invariant[0]),
        ("isotropy_orders", lambda c: c.invariant[:2]),
        ("isotropy_exponents", lambda c: c.invariant[:3]),
        ("isotropy_order_profiles", lambda c: c.invariant),
    ]
    for name, key in checks:
        if Counter(key(c) for c in c1) != Counter(key(c) for c in c2):
            return name
    return None


def _generators(G: FiniteGroupoid, fiber: Sequence[int], orders: Dict[int, int]) -> List[int]:
    """贪心生成集，优先取阶大的元素"""
    gens: List[int] = []
    covered = {G.source[fiber[0]]} if fiber else set()
    for a in sorted(fiber, key=lambda x: (-orders[x], x)):
        if a in covered:
            continue
        gens.append(a)
        frontier = list(covered | {a})
        covered |= {a}
        while frontier:
            x = frontier.pop()
            for y in list(covered):
                for p in (G.compose(x, y), G.compose(y, x)):
                    if p not in covered:
                        covered.add(p)
                        frontier.append(p)
        if len(covered) == len(fiber):
            break
    return gens


def group_isomorphism(
    G1: FiniteGroupoid, fiber1: Sequence[int],
    G2: FiniteGroupoid, fiber2: Sequence[int],
    budget: _Budget
) -> Optional[Dict[int, int]]:
    """迷向群之间的同构：生成元像回溯 + 阶剪枝"""
    if len(fiber1) != len(fiber2):
        return None
    orders1 = {a: element_order(G1, a) for a in fiber1}
    orders2 = {b: element_order(G2, b) for b in fiber2}
    gens = _generators(G1, fiber1, orders1)
    unit1, unit2 = G1.source[fiber1[0]], G2.source[fiber2[0]]

    def extend(forward: Dict[int, int], backward: Dict[int, int], g: int, h: int):
        forward, backward = dict(forward), dict(backward)
        forward[g], backward[h] = h, g
        frontier = [g]
        while frontier:
            x = frontier.pop()
            for y in list(forward):
                for a, b in ((x, y), (y, x)):
                    p = G1.compose(a, b)
                    w = G2.compose(forward[a], forward[b])
                    if p in forward:
                        if forward[p] != w:
                            return None
                    elif w in backward:
                        return None
                    else:
                        forward[p], backward[w] = w, p
                        frontier.append(p)
        return forward, backward

    def search(i: int, forward: Dict[int, int], backward: Dict[int, int]) -> Optional[Dict[int, int]]:
        if i == len(gens):
            return forward if len(forward) == len(fiber1) else None
        g = gens[i]
        if g in forward:
            return search(i + 1, forward, backward)
        for h in fiber2:
            if h in backward or orders2[h] != orders1[g]:
                continue
            budget.tick()
            extended = extend(forward, backward, g, h)
            if extended is not None:
                found = search(i + 1, *extended)
                if found is not None:
                    return found
        return None

    return search(0, {unit1: unit2}, {unit2: unit1})


def replay_certificate(G1: FiniteGroupoid, G2: FiniteGroupoid, certificate: Sequence[int]) -> bool:
    """逐项重放：双射、保持单位、d、r、复合与求逆"""
    f = tuple(certificate)
    if len(f) != len(G1) or len(G1) != len(G2) or sorted(f) != list(G2.arrows()):
        return False
    if {f[x] for x in G1.units} != set(G2.units):
        return False
    for a in G1.arrows():
        if G2.source[f[a]] != f[G1.source[a]] or G2.range[f[a]] != f[G1.range[a]]:
            return False
        if G2.inv(f[a]) != f[G1.inv(a)]:
            return False
    return all(G2.compose(f[a], f[b]) == f[G1.compose(a, b)] for a, b in G1.composable_pairs())


def invert_certificate(certificate: Sequence[int]) -> Tuple[int, ...]:
    inverse = [0] * len(certificate)
    for a, b in enumerate(certificate):
        inverse[b] = a
    return tuple(inverse)


def are_isomorphic(G1: FiniteGroupoid, G2: FiniteGroupoid, budget: Optional[int] = None) -> IsomorphismResult:
    """判定两个有限群胚是否同构

    Raises:
        SearchBudgetExceededError: 迷向群搜索节点数超过上限
    """
    limit = get_settings().budget if budget is None else budget
    counter = _Budget(limit)

    comps1 = _components(G1)
    comps2 = _components(G2)
    refutation = _refute(G1, G2, comps1, comps2)
    if refutation is not None:
        logger.debug(f"同构被不变量否定: {refutation}", extra={"left": G1.name, "right": G2.name})
        return IsomorphismResult(False, refutation=refutation)

    certificate = [-1] * len(G1)
    unmatched = list(comps2)
    for c1 in comps1:
        match = None
        for c2 in unmatched:
            if c2.invariant != c1.invariant:
                continue
            phi = group_isomorphism(G1, c1.fiber, G2, c2.fiber, counter)
            if phi is not None:
                match = (c2, phi)
                break
        if match is None:
            return IsomorphismResult(False, refutation="isotropy_groups", nodes=counter.nodes)
        c2, phi = match
        unmatched.remove(c2)

        # 单位之间任取双射，箭头 t_z g t_y⁻¹ ↦ t'_{πz} φ(g) t'_{πy}⁻¹
        pi = dict(zip([c1.base] + [y for y in c1.units if y != c1.base],
                      [c2.base] + [y for y in c2.units if y != c2.base]))
        t1, t2 = c1.transversal, c2.transversal
        for a in G1.arrows():
            y, z = G1.source[a], G1.range[a]
            if y not in pi:
                continue
            g = G1.compose(G1.compose(G1.inv(t1[z]), a), t1[y])
            image = G2.compose(G2.compose(t2[pi[z]], phi[g]), G2.inv(t2[pi[y]]))
            certificate[a] = image

    result = tuple(certificate)
    ensure(replay_certificate(G1, G2, result), "同构证书重放失败", left=G1.name, right=G2.name)
    logger.debug(
        f"找到同构: {G1.name} ≅ {G2.name}",
        extra={"left": G1.name, "right": G2.name, "nodes": counter.nodes}
    )
    return IsomorphismResult(True, certificate=result, nodes=counter.nodes)
