"""
Munn 树：自由逆半群 FIS(X) 的元素
"""
from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

from .words import Word, free_reduce, invert_word, content


@dataclass(frozen=True)
class MunnTree:
    """自由群 Cayley 图中含空词、前缀封闭的有限子树，起始根为空词，终止根为 end"""

    vertices: FrozenSet[Word]
    end: Word

    @property
    def start(self) -> Word:
        return ()

    def edges(self) -> List[Tuple[Word, str, Word]]:
        """(尾, 标号, 头)；字母为 x' 时边的方向反转"""
        result = []
        for v in self.vertices:
            if not v:
                continue
            parent, (name, sign) = v[:-1], v[-1]
            result.append((parent, name, v) if sign > 0 else (v, name, parent))
        return sorted(result)

    def is_idempotent(self) -> bool:
        return self.end == ()

    def content(self) -> FrozenSet[str]:
        names = set()
        for v in self.vertices:
            names |= content(v)
        return frozenset(names)


def munn_from_word(word: Word) -> MunnTree:
    """词读过的路径（逐前缀约化）即其 Munn 树"""
    vertices = {()}
    stack: Word = ()
    for letter in word:
        stack = free_reduce(stack + (letter,))
        vertices.add(stack)
    return MunnTree(frozenset(vertices), stack)


def _translate(prefix: Word, vertices: FrozenSet[Word]) -> FrozenSet[Word]:
    return frozenset(free_reduce(prefix + v) for v in vertices)


def munn_multiply(a: MunnTree, b: MunnTree) -> MunnTree:
    """(T1, r1)(T2, r2) = (T1 ∪ r1·T2, r1 r2)"""
    return MunnTree(a.vertices | _translate(a.end, b.vertices), free_reduce(a.end + b.end))


def munn_invert(a: MunnTree) -> MunnTree:
    """(T, r)* = (r⁻¹·T, r⁻¹)"""
    back = invert_word(a.end)
    return MunnTree(_translate(back, a.vertices), back)


def munn_to_fcis(a: MunnTree):
    """Clifford 商映射 FIS(X) → FCIS(X)

    Raises:
        EmptySupportError: 空词的 Munn 树没有字母，FCIS 中没有对应元素
    """
    from .fcis import FcisElement

    return FcisElement(a.content(), a.end)
