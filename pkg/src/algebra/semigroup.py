"""
有限逆半群：乘法表表示、公理校验、部分双射生成、构造器与同态枚举
"""
from collections import deque
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..core import (
    get_logger, get_settings,
    MalformedTableError, NonAssociativeError, BadInverseError,
    NoncommutingIdempotentsError, SemigroupValidationError,
    SizeLimitExceededError, NotIdempotentError
)

logger = get_logger()

# 部分双射中“无定义”的编码
UNDEFINED = -1


class FiniteInverseSemigroup:
    """有限逆半群（构造后不可变）

    元素是 0..n-1 的稠密整数 id，element_names 仅用于展示。
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        inverse: Sequence[int],
        element_names: Optional[Sequence[str]] = None,
        name: str = "S"
    ):
        array = np.array(table, dtype=np.int64)
        array.setflags(write=False)
        self.table = array
        self.inverse = tuple(int(x) for x in inverse)
        self.name = name

        n = array.shape[0]
        if element_names is None:
            element_names = [str(i) for i in range(n)]
        self.element_names: Tuple[str, ...] = tuple(element_names)
        self._rows: List[List[int]] = array.tolist()
        self._ids: Dict[str, int] = {label: i for i, label in enumerate(self.element_names)}

        self.zero = _detect_zero(self._rows)
        self.one = _detect_one(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __repr__(self) -> str:
        return f"FiniteInverseSemigroup(name={self.name!r}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self._rows)

    def elements(self) -> range:
        return range(len(self._rows))

    def mul(self, s: int, t: int) -> int:
        return self._rows[s][t]

    def product(self, *elements: int) -> int:
        """从左到右连乘"""
        return reduce(self.mul, elements)

    def inv(self, s: int) -> int:
        return self.inverse[s]

    def source_idempotent(self, s: int) -> int:
        """s*s"""
        return self._rows[self.inverse[s]][s]

    def range_idempotent(self, s: int) -> int:
        """ss*"""
        return self._rows[s][self.inverse[s]]

    def conjugate(self, s: int, e: int) -> int:
        """s e s*"""
        return self._rows[self._rows[s][e]][self.inverse[s]]

    def name_of(self, s: int) -> str:
        return self.element_names[s]

    def id_of(self, label: str) -> int:
        """按名字查元素 id，不存在时抛出 KeyError"""
        return self._ids[label]

    @cached_property
    def _idempotents(self) -> Tuple[int, ...]:
        return tuple(s for s in self.elements() if self._rows[s][s] == s)

    def idempotents(self) -> Tuple[int, ...]:
        """全部幂等元，按 id 升序"""
        return self._idempotents

    def is_idempotent(self, s: int) -> bool:
        return self._rows[s][s] == s

    def natural_order_leq(self, e: int, f: int) -> bool:
        """幂等元上的自然序：e ≤ f 当且仅当 ef = e"""
        for x in (e, f):
            if not self.is_idempotent(x):
                raise NotIdempotentError(
                    f"元素 {self.name_of(x)} 不是幂等元",
                    details={"element": self.name_of(x)}
                )
        return self._rows[e][f] == e

    def up_set(self, e: int) -> frozenset:
        """{f ∈ E(S) : f ≥ e}"""
        return frozenset(f for f in self._idempotents if self._rows[e][f] == e)

    def meet(self, idempotents: Iterable[int]) -> int:
        """若干幂等元的乘积（半格中的下确界）"""
        return reduce(self.mul, idempotents)

    @cached_property
    def minimum_idempotent(self) -> int:
        """E(S) 的最小元（全部幂等元之积）"""
        return self.meet(self._idempotents)

    def is_clifford(self) -> bool:
        return all(self.source_idempotent(s) == self.range_idempotent(s) for s in self.elements())

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def is_group(self) -> bool:
        return len(self._idempotents) == 1

    def is_semilattice(self) -> bool:
        return len(self._idempotents) == self.order


@dataclass(frozen=True)
class PartialBijection:
    """有限集合 {0..m-1} 上的部分双射，UNDEFINED 表示无定义"""

    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        defined = [x for x in self.images if x != UNDEFINED]
        if any(x < 0 or x >= self.degree for x in defined):
            raise ValueError(f"像超出范围: {list(self.images)}")
        if len(set(defined)) != len(defined):
            raise ValueError(f"部分映射不是单射: {list(self.images)}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def compose(self, other: "PartialBijection") -> "PartialBijection":
        """乘积 self·other = self∘other（先作用 other）"""
        return PartialBijection(tuple(
            UNDEFINED if x == UNDEFINED else self.images[x] for x in other.images
        ))

    def inverse(self) -> "PartialBijection":
        result = [UNDEFINED] * self.degree
        for i, x in enumerate(self.images):
            if x != UNDEFINED:
                result[x] = i
        return PartialBijection(tuple(result))

    def domain(self) -> frozenset:
        return frozenset(i for i, x in enumerate(self.images) if x != UNDEFINED)

    def label(self) -> str:
        return "[" + ",".join("-" if x == UNDEFINED else str(x) for x in self.images) + "]"


@dataclass(frozen=True)
class SemigroupHom:
    """半群同态 source → target，map 按源元素 id 索引"""

    source: FiniteInverseSemigroup
    target: FiniteInverseSemigroup
    map: Tuple[int, ...]

    def __call__(self, s: int) -> int:
        return self.map[s]

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def image(self) -> frozenset:
        return frozenset(self.map)


def _detect_zero(rows: List[List[int]]) -> Optional[int]:
    n = len(rows)
    for z in range(n):
        if all(rows[z][s] == z and rows[s][z] == z for s in range(n)):
            return z
    return None


def _detect_one(rows: List[List[int]]) -> Optional[int]:
    n = len(rows)
    for u in range(n):
        if all(rows[u][s] == s and rows[s][u] == s for s in range(n)):
            return u
    return None


def _coerce_table(table) -> np.ndarray:
    try:
        array = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise MalformedTableError(f"乘法表无法解析为整数矩阵: {e}")

    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise MalformedTableError(
            "乘法表必须是非空方阵",
            details={"shape": list(array.shape)}
        )
    n = array.shape[0]
    if array.min() < 0 or array.max() >= n:
        raise MalformedTableError(f"乘法表的取值必须在 0..{n - 1} 之间")
    return array


def _find_inverse(array: np.ndarray) -> List[int]:
    """表中未给出逆元时，逐元素搜索满足 s t s = s、t s t = t 的最小 t"""
    n = array.shape[0]
    inverse = []
    for s in range(n):
        candidates = [
            t for t in range(n)
            if array[array[s, t], s] == s and array[array[t, s], t] == t
        ]
        if not candidates:
            raise BadInverseError(
                f"元素 {s} 没有逆元",
                details={"element": s}
            )
        inverse.append(candidates[0])
    return inverse


def check_axioms(table, inverse: Optional[Sequence[int]] = None) -> Optional[SemigroupValidationError]:
    """校验逆半群公理

    Returns:
        第一个不成立的公理（附见证元素），全部成立时返回 None
    """
    try:
        array = _coerce_table(table)
        n = array.shape[0]

        # (st)u 与 s(tu) 逐项比较
        left = array[array]
        right = array[np.arange(n)[:, None, None], array[None, :, :]]
        mismatch = np.argwhere(left != right)
        if mismatch.size:
            s, t, u = (int(x) for x in mismatch[0])
            return NonAssociativeError(
                f"结合律不成立: ({s}·{t})·{u} ≠ {s}·({t}·{u})",
                details={"s": s, "t": t, "u": u}
            )

        if inverse is None:
            inverse = _find_inverse(array)
        inv = np.array(inverse, dtype=np.int64)
        if inv.shape != (n,) or inv.min() < 0 or inv.max() >= n:
            return MalformedTableError(
                "逆元表长度或取值非法",
                details={"inverse": [int(x) for x in inverse]}
            )

        idx = np.arange(n)
        bad = np.flatnonzero(
            (array[array[idx, inv], idx] != idx) | (array[array[inv, idx], inv] != inv)
        )
        if bad.size:
            s = int(bad[0])
            return BadInverseError(
                f"逆元公理不成立: s = {s}, s* = {int(inv[s])}",
                details={"s": s, "s_star": int(inv[s])}
            )

        idempotents = np.flatnonzero(array[idx, idx] == idx)
        block = array[np.ix_(idempotents, idempotents)]
        clash = np.argwhere(block != block.T)
        if clash.size:
            e, f = (int(idempotents[x]) for x in clash[0])
            return NoncommutingIdempotentsError(
                f"幂等元不交换: {e}·{f} ≠ {f}·{e}",
                details={"e": e, "f": f}
            )
    except SemigroupValidationError as e:
        return e

    return None


def validate(
    table,
    inverse: Optional[Sequence[int]] = None,
    element_names: Optional[Sequence[str]] = None,
    name: str = "S"
) -> FiniteInverseSemigroup:
    """校验乘法表并构造逆半群，不做任何修补

    Raises:
        SemigroupValidationError: 第一个不成立的公理
    """
    violation = check_axioms(table, inverse)
    if violation is not None:
        violation.details.setdefault("semigroup", name)
        raise violation

    array = np.array(table, dtype=np.int64)
    if inverse is None:
        inverse = _find_inverse(array)
    if element_names is not None and len(element_names) != array.shape[0]:
        raise MalformedTableError(
            "元素名数量与乘法表阶数不一致",
            details={"names": len(element_names), "order": int(array.shape[0])}
        )
    if element_names is not None and len(set(element_names)) != len(element_names):
        raise MalformedTableError("元素名重复", details={"names": list(element_names)})

    return FiniteInverseSemigroup(array, inverse, element_names, name)


def generate_from_partial_bijections(
    generators: Sequence[PartialBijection],
    size_limit: Optional[int] = None,
    name: str = "S"
) -> FiniteInverseSemigroup:
    """部分双射在复合与求逆下生成的逆半群"""
    if not generators:
        raise MalformedTableError("至少需要一个生成元")
    if len({g.degree for g in generators}) != 1:
        raise MalformedTableError(
            "生成元的次数不一致",
            details={"degrees": sorted({g.degree for g in generators})}
        )
    limit = get_settings().size_limit if size_limit is None else size_limit

    letters = list(dict.fromkeys(list(generators) + [g.inverse() for g in generators]))
    elements: List[PartialBijection] = []
    index: Dict[PartialBijection, int] = {}
    queue = deque()

    def add(x: PartialBijection) -> None:
        if x in index:
            return
        if len(elements) >= limit:
            raise SizeLimitExceededError(
                f"生成的半群超过元素上限 {limit}",
                details={"size_limit": limit}
            )
        index[x] = len(elements)
        elements.append(x)
        queue.append(x)

    for g in letters:
        add(g)
    while queue:
        x = queue.popleft()
        for g in letters:
            add(x.compose(g))

    table = [[index[x.compose(y)] for y in elements] for x in elements]
    inverse = [index[x.inverse()] for x in elements]
    semigroup = FiniteInverseSemigroup(table, inverse, [x.label() for x in elements], name)

    logger.info(
        f"部分双射生成完成: {name}",
        extra={"semigroup": name, "order": semigroup.order, "generators": len(generators)}
    )
    return semigroup


def check_hom(h: SemigroupHom) -> bool:
    """逐对检查 h(st) = h(s)h(t)"""
    if len(h.map) != h.source.order:
        return False
    m = np.array(h.map, dtype=np.int64)
    if m.size and (m.min() < 0 or m.max() >= h.target.order):
        return False
    return bool(np.array_equal(m[h.source.table], h.target.table[m[:, None], m[None, :]]))


def closure(S: FiniteInverseSemigroup, generators: Iterable[int]) -> frozenset:
    """generators 在乘法下生成的子半群"""
    found = set(generators)
    frontier = list(found)
    while frontier:
        x = frontier.pop()
        for y in list(found):
            for p in (S.mul(x, y), S.mul(y, x)):
                if p not in found:
                    found.add(p)
                    frontier.append(p)
    return frozenset(found)


def generating_set(S: FiniteInverseSemigroup) -> Tuple[int, ...]:
    """贪心选取的（半群意义下的）生成集"""
    gens: List[int] = []
    covered: frozenset = frozenset()
    for s in S.elements():
        if s not in covered:
            gens.append(s)
            covered = closure(S, gens)
        if len(covered) == S.order:
            break
    return tuple(gens)


def enumerate_homs(source: FiniteInverseSemigroup, target: FiniteInverseSemigroup) -> Iterator[Tuple[int, ...]]:
    """枚举 source → target 的全部半群同态

    在生成集上回溯赋值，每次赋值后沿乘积传播并检查一致性。
    """
    gens = generating_set(source)
    n = source.order

    def extend(assignment: Dict[int, int], g: int, value: int) -> Optional[Dict[int, int]]:
        if g in assignment:
            return assignment if assignment[g] == value else None
        result = dict(assignment)
        result[g] = value
        frontier = [g]
        while frontier:
            x = frontier.pop()
            for y in list(result):
                for a, b in ((x, y), (y, x)):
                    p = source.mul(a, b)
                    w = target.mul(result[a], result[b])
                    if p in result:
                        if result[p] != w:
                            return None
                    else:
                        result[p] = w
                        frontier.append(p)
        return result

    def search(i: int, assignment: Dict[int, int]) -> Iterator[Tuple[int, ...]]:
        if i == len(gens):
            yield tuple(assignment[s] for s in range(n))
            return
        if gens[i] in assignment:
            yield from search(i + 1, assignment)
            return
        for value in target.elements():
            extended = extend(assignment, gens[i], value)
            if extended is not None:
                yield from search(i + 1, extended)

    yield from search(0, {})


def subsemigroup(
    S: FiniteInverseSemigroup,
    elements: Iterable[int],
    name: Optional[str] = None
) -> Tuple[FiniteInverseSemigroup, Tuple[int, ...]]:
    """取逆子半群，返回 (子半群, 嵌入映射)"""
    members = sorted(set(elements))
    index = {s: i for i, s in enumerate(members)}
    try:
        table = [[index[S.mul(s, t)] for t in members] for s in members]
        inverse = [index[S.inv(s)] for s in members]
    except KeyError as e:
        raise MalformedTableError(
            "所选元素在乘法或求逆下不封闭",
            details={"escaped": S.name_of(e.args[0])}
        )
    sub = FiniteInverseSemigroup(table, inverse, [S.name_of(s) for s in members], name or f"{S.name}'")
    return sub, tuple(members)


def is_normal_subsemigroup(S: FiniteInverseSemigroup, members: Iterable[int]) -> bool:
    """包含 E(S)，对乘积、求逆与共轭 s n s* 封闭"""
    N = frozenset(members)
    if not set(S.idempotents()) <= N:
        return False
    if any(S.inv(n) not in N for n in N):
        return False
    if any(S.mul(a, b) not in N for a in N for b in N):
        return False
    return all(S.conjugate(s, n) in N for s in S.elements() for n in N)


def cyclic_group(n: int, name: Optional[str] = None) -> FiniteInverseSemigroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    inverse = [(-i) % n for i in range(n)]
    return FiniteInverseSemigroup(table, inverse, None, name or f"Z{n}")


def two_element_semilattice() -> FiniteInverseSemigroup:
    """({0,1}, 乘法)"""
    return FiniteInverseSemigroup([[0, 0], [0, 1]], [0, 1], ["0", "1"], "{0,1}")


def adjoin_zero(S: FiniteInverseSemigroup, name: Optional[str] = None) -> FiniteInverseSemigroup:
    """添加新零元，零元 id 为 n"""
    n = S.order
    table = [list(row) + [n] for row in S.table.tolist()] + [[n] * (n + 1)]
    inverse = list(S.inverse) + [n]
    names = list(S.element_names) + ["0"]
    if len(set(names)) != len(names):
        names[-1] = "θ"
    return FiniteInverseSemigroup(table, inverse, names, name or f"{S.name}∪{{0}}")


def direct_product(
    S: FiniteInverseSemigroup,
    T: FiniteInverseSemigroup,
    name: Optional[str] = None
) -> FiniteInverseSemigroup:
    """直积，(s, t) 的 id 为 s·|T| + t"""
    m = T.order
    pairs = [(s, t) for s in S.elements() for t in T.elements()]
    table = [
        [S.mul(s1, s2) * m + T.mul(t1, t2) for (s2, t2) in pairs]
        for (s1, t1) in pairs
    ]
    inverse = [S.inv(s) * m + T.inv(t) for (s, t) in pairs]
    names = [f"({S.name_of(s)},{T.name_of(t)})" for (s, t) in pairs]
    return FiniteInverseSemigroup(table, inverse, names, name or f"{S.name}×{T.name}")


def symmetric_inverse_monoid(degree: int, name: Optional[str] = None) -> FiniteInverseSemigroup:
    """次数为 degree 的全部部分双射"""
    points = range(degree)
    generators = []
    for k in range(degree + 1):
        for domain in combinations(points, k):
            for image in _injections(domain, points):
                images = [UNDEFINED] * degree
                for x, y in zip(domain, image):
                    images[x] = y
                generators.append(PartialBijection(tuple(images)))
    return generate_from_partial_bijections(generators, name=name or f"SIM{degree}")


def _injections(domain: Tuple[int, ...], points: range) -> Iterator[Tuple[int, ...]]:
    if not domain:
        yield ()
        return
    for head in points:
        for tail in _injections(domain[1:], points):
            if head not in tail:
                yield (head,) + tail
