"""
自由 Clifford 逆半群 FCIS(X)：范式 (支撑集, 既约词)、特征、商映射与预言机校验
"""
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ...core import get_logger, EmptySupportError, NotCliffordError
from ..semigroup import FiniteInverseSemigroup
from .words import Word, Letter, free_reduce, invert_word, content, is_reduced, letters_over, format_word

logger = get_logger()


@dataclass(frozen=True)
class FcisElement:
    """FCIS(X) 的范式元素 (C, w)"""

    support: FrozenSet[str]
    word: Word

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        object.__setattr__(self, "word", tuple(self.word))
        if not self.support:
            raise EmptySupportError("FCIS 元素的支撑集不能为空")
        if not is_reduced(self.word):
            raise ValueError(f"词不是既约的: {format_word(self.word)}")
        if not content(self.word) <= self.support:
            raise ValueError("词中的字母必须属于支撑集")

    def is_idempotent(self) -> bool:
        return not self.word

    def label(self) -> str:
        return "({" + ",".join(sorted(self.support)) + "}, " + format_word(self.word) + ")"


def fcis_from_word(word: Word) -> FcisElement:
    """原始词的范式 (content(w), reduce(w))"""
    return FcisElement(content(word), free_reduce(word))


def fcis_multiply(a: FcisElement, b: FcisElement) -> FcisElement:
    return FcisElement(a.support | b.support, free_reduce(a.word + b.word))


def fcis_invert(a: FcisElement) -> FcisElement:
    return FcisElement(a.support, invert_word(a.word))


def idempotent_of(subset: Iterable[str]) -> FcisElement:
    """e_A = (A, ε)"""
    return FcisElement(frozenset(subset), ())


def nonempty_subsets(alphabet: Sequence[str]) -> List[FrozenSet[str]]:
    names = sorted(set(alphabet))
    return [frozenset(c) for k in range(1, len(names) + 1) for c in combinations(names, k)]


def fcis_characters(alphabet: Sequence[str]) -> List[FrozenSet[str]]:
    """全部特征 χ_A，以非空子集 A 表示"""
    return nonempty_subsets(alphabet)


def fcis_evaluate_char(subset: FrozenSet[str], element: FcisElement) -> int:
    """χ_A(C, w) = 1 当且仅当 C ⊆ A"""
    if not subset:
        raise EmptySupportError("特征 χ_A 的指标集不能为空")
    return 1 if element.support <= subset else 0


def fcis_quotient_by_char(subset: FrozenSet[str], element: FcisElement) -> Optional[Word]:
    """σ：支撑集含于 A 时给出 F(A) 中的既约词，否则为零（None）"""
    if not subset:
        raise EmptySupportError("特征 χ_A 的指标集不能为空")
    return element.word if element.support <= subset else None


def multiply_with_zero(a: Optional[Word], b: Optional[Word]) -> Optional[Word]:
    """F(A) ∪ {0} 中的乘法"""
    if a is None or b is None:
        return None
    return free_reduce(a + b)


def fcis_nu_char_related(alphabet: Sequence[str], subset: FrozenSet[str], s: FcisElement, t: FcisElement) -> bool:
    """按 ν_{ρ,min} 的定义判定 (s, t) ∈ ν_{χ_A}，见证幂等元 e_D 遍历 X 的全部非空子集"""
    value = fcis_evaluate_char(subset, fcis_multiply(fcis_invert(s), s))
    if value != fcis_evaluate_char(subset, fcis_multiply(fcis_invert(t), t)):
        return False
    for D in nonempty_subsets(alphabet):
        e = idempotent_of(D)
        if fcis_evaluate_char(subset, e) != value:
            continue
        if fcis_multiply(s, e) == fcis_multiply(t, e):
            return True
    return False


def fcis_idempotent_semilattice(alphabet: Sequence[str]) -> Tuple[FiniteInverseSemigroup, List[FrozenSet[str]]]:
    """E(FCIS(X))：非空子集在并运算下的半格，e_A e_B = e_{A∪B}"""
    subsets = nonempty_subsets(alphabet)
    index = {A: i for i, A in enumerate(subsets)}
    table = [[index[A | B] for B in subsets] for A in subsets]
    names = ["{" + ",".join(sorted(A)) + "}" for A in subsets]
    S = FiniteInverseSemigroup(table, list(range(len(subsets))), names, f"E(FCIS({','.join(sorted(alphabet))}))")
    return S, subsets


def evaluate_word(T: FiniteInverseSemigroup, assignment: Dict[str, int], word: Word) -> int:
    """在 T 中求值：x ↦ assignment[x]，x' ↦ assignment[x]*"""
    value = None
    for name, sign in word:
        letter = assignment[name] if sign > 0 else T.inv(assignment[name])
        value = letter if value is None else T.mul(value, letter)
    if value is None:
        raise EmptySupportError("空词在半群中没有取值")
    return value


def _require_clifford(targets: Sequence[FiniteInverseSemigroup]) -> None:
    for T in targets:
        if not T.is_clifford():
            raise NotCliffordError(
                f"目标半群 {T.name} 不是 Clifford 的",
                details={"semigroup": T.name}
            )


def fcis_oracle_check(w1: Word, w2: Word, targets: Sequence[FiniteInverseSemigroup]) -> bool:
    """在每个 Clifford 目标的每个赋值下比较两个词的取值"""
    _require_clifford(targets)
    alphabet = sorted(content(w1) | content(w2))
    for T in targets:
        for values in product(T.elements(), repeat=len(alphabet)):
            assignment = dict(zip(alphabet, values))
            if evaluate_word(T, assignment, w1) != evaluate_word(T, assignment, w2):
                return False
    return True


def fcis_soundness_sweep(
    alphabet: Sequence[str],
    max_length: int,
    targets: Sequence[FiniteInverseSemigroup]
) -> Optional[Tuple[str, Word]]:
    """范式可靠性扫描

    对长度 ≤ max_length 的每个原始词，在全部赋值上（向量化）比较原始取值与范式取值
    e_C · reduce(w)。返回第一个反例 (目标名, 词)，全部通过时返回 None。
    """
    _require_clifford(targets)
    names = sorted(set(alphabet))
    letters = letters_over(names)

    for T in targets:
        table = T.table
        inverse = np.array(T.inverse, dtype=np.int64)
        assignments = np.array(list(product(T.elements(), repeat=len(names))), dtype=np.int64)
        letter_values: Dict[Letter, np.ndarray] = {}
        idempotent_values: Dict[str, np.ndarray] = {}
        for i, name in enumerate(names):
            a = assignments[:, i]
            letter_values[(name, 1)] = a
            letter_values[(name, -1)] = inverse[a]
            idempotent_values[name] = table[a, inverse[a]]

        # 栈元素为 (字母, 既约前缀的取值)
        def visit(word: Word, raw, support: FrozenSet[str], idem, stack) -> Optional[Word]:
            normal = idem if not stack else table[idem, stack[-1][1]]
            if not np.array_equal(raw, normal):
                return word
            if len(word) == max_length:
                return None
            for letter in letters:
                name = letter[0]
                value = letter_values[letter]
                if name in support:
                    next_idem = idem
                else:
                    next_idem = table[idem, idempotent_values[name]]
                if stack and stack[-1][0] == (name, -letter[1]):
                    next_stack = stack[:-1]
                else:
                    top = value if not stack else table[stack[-1][1], value]
                    next_stack = stack + ((letter, top),)
                found = visit(word + (letter,), table[raw, value], support | {name}, next_idem, next_stack)
                if found is not None:
                    return found
            return None

        for letter in letters:
            name = letter[0]
            value = letter_values[letter]
            found = visit((letter,), value, frozenset({name}), idempotent_values[name], ((letter, value),))
            if found is not None:
                logger.warning(
                    f"FCIS 范式在 {T.name} 上被反驳: {format_word(found)}",
                    extra={"target": T.name, "word": format_word(found)}
                )
                return T.name, found

        logger.debug(
            f"FCIS 范式扫描通过: {T.name}",
            extra={"target": T.name, "alphabet": names, "max_length": max_length}
        )
    return None
