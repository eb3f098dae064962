"""
Cuntz 逆半群 S_n：元素 s_μ s_ν* 与零，及到 {0,1} 的同态计数
"""
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ...core import get_logger, get_settings, ParseError

logger = get_logger()


@dataclass(frozen=True)
class CuntzElement:
    """s_μ s_ν*；is_zero 为真时表示零元"""

    left: Tuple[int, ...] = ()
    right: Tuple[int, ...] = ()
    is_zero: bool = False

    def label(self) -> str:
        if self.is_zero:
            return "0"
        if not self.left and not self.right:
            return "1"
        parts = [f"s{i}" for i in self.left] + [f"s{j}*" for j in reversed(self.right)]
        return " ".join(parts)


ZERO = CuntzElement(is_zero=True)
UNIT = CuntzElement()


def _check_letters(n: int, *words: Sequence[int]) -> None:
    for word in words:
        for i in word:
            if not 1 <= i <= n:
                raise ParseError(
                    f"Cuntz 生成元下标 {i} 超出 1..{n}",
                    details={"field": "n", "index": i}
                )


def generator(i: int, n: int) -> CuntzElement:
    _check_letters(n, (i,))
    return CuntzElement((i,), ())


def generator_star(i: int, n: int) -> CuntzElement:
    _check_letters(n, (i,))
    return CuntzElement((), (i,))


def cuntz_multiply(a: CuntzElement, b: CuntzElement, n: int) -> CuntzElement:
    """(μ,ν)(μ',ν')：由 s_ν* s_μ' 的前缀消去决定"""
    if a.is_zero or b.is_zero:
        return ZERO
    _check_letters(n, a.left, a.right, b.left, b.right)
    nu, mu = a.right, b.left
    if mu[:len(nu)] == nu:
        # s_ν* s_μ' = s_{μ' 去掉 ν}
        return CuntzElement(a.left + mu[len(nu):], b.right)
    if nu[:len(mu)] == mu:
        # s_ν* s_μ' = s_{ν 去掉 μ'}*
        return CuntzElement(a.left, b.right + nu[len(mu):])
    return ZERO


def cuntz_invert(a: CuntzElement) -> CuntzElement:
    if a.is_zero:
        return ZERO
    return CuntzElement(a.right, a.left)


def cuntz_idempotent(a: CuntzElement) -> bool:
    return a.is_zero or a.left == a.right


def enumerate_cuntz_elements(n: int, max_length: int) -> List[CuntzElement]:
    """零元及 |μ| + |ν| ≤ max_length 的全部 s_μ s_ν*"""
    letters = range(1, n + 1)
    result = [ZERO]
    for total in range(max_length + 1):
        for k in range(total + 1):
            for mu in product(letters, repeat=k):
                for nu in product(letters, repeat=total - k):
                    result.append(CuntzElement(tuple(mu), tuple(nu)))
    return result


def cuntz_homs_to_two(n: int, max_length: Optional[int] = None) -> int:
    """到 {0,1} 的非零同态个数（在截断元素集合上穷举检验）

    同态由 0、1、s_i、s_i* 的取值决定；对每种 {0,1} 赋值，检查截断集合内
    所有乘积仍在集合中的元素对上的乘法性。
    """
    L = get_settings().cuntz_max_length if max_length is None else max_length
    elements = enumerate_cuntz_elements(n, L)
    index: Dict[CuntzElement, int] = {x: i for i, x in enumerate(elements)}

    # 取值向量的列：0, 1, s_1..s_n, s_1*..s_n*
    generators = 2 + 2 * n
    assignments = np.array(list(product((0, 1), repeat=generators)), dtype=np.int64)

    def column(x: CuntzElement) -> np.ndarray:
        if x.is_zero:
            return assignments[:, 0]
        if not x.left and not x.right:
            return assignments[:, 1]
        value = np.ones(len(assignments), dtype=np.int64)
        for i in x.left:
            value = value & assignments[:, 1 + i]
        for j in x.right:
            value = value & assignments[:, 1 + n + j]
        return value

    values = np.stack([column(x) for x in elements], axis=1)
    valid = values.any(axis=1)
    for a in elements:
        for b in elements:
            p = index.get(cuntz_multiply(a, b, n))
            if p is None:
                continue
            valid &= values[:, p] == (values[:, index[a]] & values[:, index[b]])

    count = int(valid.sum())
    logger.info(
        f"Cuntz 半群同态计数完成: n={n}",
        extra={"n": n, "max_length": L, "elements": len(elements), "homs": count}
    )
    return count
