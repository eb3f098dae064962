"""
自由群中的词：解析、格式化、自由约化
"""
import re
from itertools import product
from typing import FrozenSet, Iterable, Iterator, Sequence, Tuple

from ...core import ParseError

# (字母名, ±1)
Letter = Tuple[str, int]
Word = Tuple[Letter, ...]

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(['*]*)$")


def parse_word(text: str) -> Word:
    """解析形如 "x y' x" 的词，x' 与 x* 都表示逆字母"""
    letters = []
    for token in text.split():
        match = _TOKEN.match(token)
        if match is None:
            raise ParseError(
                f"无法解析字母: {token!r}",
                details={"field": "word", "token": token}
            )
        name, marks = match.groups()
        letters.append((name, -1 if len(marks) % 2 else 1))
    return tuple(letters)


def format_word(word: Word) -> str:
    if not word:
        return "ε"
    return " ".join(name if sign > 0 else f"{name}'" for name, sign in word)


def invert_letter(letter: Letter) -> Letter:
    return (letter[0], -letter[1])


def invert_word(word: Word) -> Word:
    return tuple(invert_letter(letter) for letter in reversed(word))


def free_reduce(word: Iterable[Letter]) -> Word:
    """反复消去相邻的 x x'"""
    stack = []
    for letter in word:
        if stack and stack[-1] == invert_letter(letter):
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def is_reduced(word: Word) -> bool:
    return all(word[i + 1] != invert_letter(word[i]) for i in range(len(word) - 1))


def content(word: Word) -> FrozenSet[str]:
    return frozenset(name for name, _ in word)


def letters_over(alphabet: Sequence[str]) -> Tuple[Letter, ...]:
    return tuple((name, sign) for name in alphabet for sign in (1, -1))


def enumerate_words(alphabet: Sequence[str], max_length: int, min_length: int = 1) -> Iterator[Word]:
    """alphabet ∪ alphabet* 上长度在给定范围内的全部词"""
    letters = letters_over(alphabet)
    for length in range(min_length, max_length + 1):
        yield from product(letters, repeat=length)


def random_word(rng, alphabet: Sequence[str], length: int) -> Word:
    """rng 为 numpy Generator"""
    letters = letters_over(alphabet)
    picks = rng.integers(0, len(letters), size=length)
    return tuple(letters[int(i)] for i in picks)
