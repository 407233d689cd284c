from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from atomic.domain.enums import Family
from atomic.domain.exceptions import DimensionMismatchError, NotAdequateError
from atomic.domain.rootdata import TypeLabel, build_root_system
from atomic.domain.weyl import WeylElement, evaluate, reduced_word


@dataclass(frozen=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.one_line)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise DimensionMismatchError(f"{list(values)} is not a permutation of 1..{len(values)}")
        object.__setattr__(self, "one_line", values)

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, k: int) -> int:
        return self.one_line[k - 1]

    def __str__(self) -> str:
        return "".join(map(str, self.one_line)) if self.n < 10 else " ".join(map(str, self.one_line))


def parse_permutation(text: str) -> Permutation:
    if "," in text or " " in text.strip():
        return Permutation(tuple(int(x) for x in text.replace(",", " ").split()))
    return Permutation(tuple(int(ch) for ch in text.strip()))


def all_permutations(n: int) -> Iterator[Permutation]:
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def longest_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def inversions(w: Permutation) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, w.n + 1) for j in range(i + 1, w.n + 1) if w(i) > w(j)]


def non_inversions(w: Permutation) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, w.n + 1) for j in range(i + 1, w.n + 1) if w(i) < w(j)]


def cosine(w: Permutation) -> int:
    return sum(k * w(k) for k in range(1, w.n + 1))


def entropy(w: Permutation) -> int:
    return sum((i - w(i)) ** 2 for i in range(1, w.n + 1))


def invsum(w: Permutation) -> int:
    return sum(j - i for i, j in inversions(w))


def ninvsum(w: Permutation) -> int:
    return sum(j - i for i, j in non_inversions(w))


def inversion_count(w: Permutation) -> int:
    return len(inversions(w))


def to_weyl(w: Permutation) -> WeylElement:
    """Bubble-sort the one-line form into a word of type A_{n-1}."""
    if w.n < 2:
        raise DimensionMismatchError("type A needs n >= 2")
    system = build_root_system(TypeLabel(Family.A, w.n - 1))
    values = list(w.one_line)
    letters = []
    while True:
        # right multiplication by s_k swaps positions k and k+1
        k = next((k for k in range(len(values) - 1) if values[k] > values[k + 1]), None)
        if k is None:
            break
        values[k], values[k + 1] = values[k + 1], values[k]
        letters.append(k + 1)
    return evaluate(system, reversed(letters))


def from_weyl(element: WeylElement) -> Permutation:
    values = list(range(1, element.system.rank + 2))
    for k in reduced_word(element):
        values[k - 1], values[k] = values[k], values[k - 1]
    return Permutation(tuple(values))


def permutohedron_distance_sq(w: Permutation, x: Sequence[int]) -> int:
    """|w(x) - x|^2 for an adequate point x, where w(x) = (w(x_1), ..., w(x_n))."""
    if len(x) != w.n or len(set(x)) != w.n or any(not 1 <= xi <= w.n for xi in x):
        raise NotAdequateError(f"{list(x)} is not an adequate point for S_{w.n}")
    return sum((w(xi) - xi) ** 2 for xi in x)


@dataclass(frozen=True)
class CosineRange:
    max_n: int
    bound: int
    attained: frozenset[int]

    @property
    def missing(self) -> list[int]:
        return [v for v in range(self.bound + 1) if v not in self.attained]


def cosine_range_probe(max_n: int, bound: int) -> CosineRange:
    """Cosine values <= bound over S_1 .. S_max_n; nothing beyond max_n is inferred."""
    attained = set()
    for n in range(1, max_n + 1):
        # minimum cosine of S_n is cos(w0) = n(n+1)(n+2)/6
        if n * (n + 1) * (n + 2) // 6 > bound:
            break
        for w in all_permutations(n):
            value = cosine(w)
            if value <= bound:
                attained.add(value)
    return CosineRange(max_n, bound, frozenset(attained))


def average_cosine(n: int) -> Fraction:
    values = [cosine(w) for w in all_permutations(n)]
    return Fraction(sum(values), len(values))


def invsum_total(n: int) -> int:
    return comb(n + 1, 3)
