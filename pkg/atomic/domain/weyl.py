"""Finite Weyl group elements as integer matrices on simple-root coordinates,
inversion sets, reduced words and reflection subgroups."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from atomic.config import Settings, get_settings
from atomic.domain.exceptions import (
    NotAReflectionError,
    NotReducedError,
    PreconditionViolationError,
    SubgroupTooLargeError,
    SystemMismatchError,
)
from atomic.domain.rootdata import (
    RootSystem,
    RootVec,
    WeightVec,
    classify_cartan,
    coroot_pairing,
    weight_from_root_coords,
)

Word = tuple[int, ...]


class WeylElement:
    __slots__ = ("system", "matrix", "_key")

    def __init__(self, system: RootSystem, matrix: np.ndarray):
        self.system = system
        self.matrix = np.asarray(matrix, dtype=np.int64)
        self.matrix.setflags(write=False)
        self._key = self.matrix.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.system is other.system and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.system.label, self._key))

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"WeylElement({self.system.label}, {list(reduced_word(self))})"

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.system.rank, dtype=np.int64)))


def identity(system: RootSystem) -> WeylElement:
    return WeylElement(system, np.eye(system.rank, dtype=np.int64))


def simple_reflection(system: RootSystem, i: int) -> WeylElement:
    system._check_index(i)
    matrix = np.eye(system.rank, dtype=np.int64)
    # s_i(alpha_j) = alpha_j - a_ij alpha_i
    matrix[i - 1, :] -= system.cartan[i - 1, :]
    return WeylElement(system, matrix)


def reflection(system: RootSystem, root: RootVec) -> WeylElement:
    n = system.rank
    matrix = np.eye(n, dtype=np.int64)
    for j in range(n):
        simple = tuple(int(k == j) for k in range(n))
        p = coroot_pairing(system, simple, root)
        for k in range(n):
            matrix[k, j] -= int(p * root.coords[k])
    return WeylElement(system, matrix)


def _same_system(u: WeylElement, v: WeylElement) -> None:
    if u.system is not v.system:
        raise SystemMismatchError(f"elements of {u.system.label} and {v.system.label}")


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    _same_system(u, v)
    return WeylElement(u.system, u.matrix @ v.matrix)


def inverse(w: WeylElement) -> WeylElement:
    matrix = np.rint(np.linalg.inv(w.matrix.astype(np.float64))).astype(np.int64)
    if not np.array_equal(matrix @ w.matrix, np.eye(w.system.rank, dtype=np.int64)):
        raise PreconditionViolationError("integer inverse check failed")
    return WeylElement(w.system, matrix)


def evaluate(system: RootSystem, word: Iterable[int]) -> WeylElement:
    result = identity(system)
    for i in word:
        result = multiply(result, simple_reflection(system, i))
    return result


def act(w: WeylElement, v: RootVec | WeightVec) -> RootVec | WeightVec:
    if isinstance(v, RootVec):
        return RootVec(tuple(int(x) for x in w.matrix @ np.asarray(v.coords, dtype=np.int64)))
    n = w.system.rank
    coords = tuple(sum((int(w.matrix[i, j]) * v.root_coords[j] for j in range(n)), Fraction(0)) for i in range(n))
    return weight_from_root_coords(w.system, coords)


def _negative_columns(images: np.ndarray) -> np.ndarray:
    return np.all(images <= 0, axis=0)


def inversion_set(w: WeylElement) -> list[RootVec]:
    """N(w): positive roots sent to negative roots by w^-1, in root order."""
    images = inverse(w).matrix @ w.system.roots_matrix
    mask = _negative_columns(images)
    return [root for root, hit in zip(w.system.positive_roots, mask) if hit]


def length(w: WeylElement) -> int:
    return int(np.count_nonzero(_negative_columns(inverse(w).matrix @ w.system.roots_matrix)))


def descents(w: WeylElement) -> list[int]:
    """Right descents: indices i with l(w s_i) < l(w), i.e. w(alpha_i) < 0."""
    return [i + 1 for i in range(w.system.rank) if np.all(w.matrix[:, i] <= 0)]


def left_descents(w: WeylElement) -> list[int]:
    inv = inverse(w).matrix
    return [i + 1 for i in range(w.system.rank) if np.all(inv[:, i] <= 0)]


def reduced_word(w: WeylElement) -> Word:
    letters: list[int] = []
    current = w
    while True:
        right = descents(current)
        if not right:
            break
        letters.append(right[0])
        current = multiply(current, simple_reflection(w.system, right[0]))
    return tuple(reversed(letters))


def longest_element(system: RootSystem) -> WeylElement:
    current = identity(system)
    while True:
        ascents = [i for i in range(1, system.rank + 1) if i not in descents(current)]
        if not ascents:
            return current
        current = multiply(current, simple_reflection(system, ascents[0]))


def inversion_set_from_word(system: RootSystem, word: Sequence[int]) -> list[RootVec]:
    """(alpha_{i1}, s_{i1}(alpha_{i2}), s_{i1}s_{i2}(alpha_{i3}), ...) for a reduced word."""
    roots = []
    prefix = identity(system)
    for i in word:
        roots.append(act(prefix, system.simple_root(i)))
        prefix = multiply(prefix, simple_reflection(system, i))
    if length(prefix) != len(word):
        raise NotReducedError(f"word {list(word)} has length {len(word)} but evaluates to length {length(prefix)}")
    return roots


def weak_order_leq(u: WeylElement, w: WeylElement) -> bool:
    """Left weak order: a reduced word of u is a prefix of one of w."""
    _same_system(u, w)
    return set(r.coords for r in inversion_set(u)) <= set(r.coords for r in inversion_set(w))


def is_reflection(w: WeylElement) -> RootVec | None:
    for root in w.system.positive_roots:
        if reflection(w.system, root) == w:
            return root
    return None


def _subgroup_cap(cap: int | None, settings: Settings | None) -> int:
    if cap is not None:
        return cap
    return (settings or get_settings()).subgroup_cap


def enumerate_group(
    system: RootSystem, cap: int | None = None, *, settings: Settings | None = None
) -> list[WeylElement]:
    generators = [simple_reflection(system, i) for i in range(1, system.rank + 1)]
    return _closure(system, generators, _subgroup_cap(cap, settings))


def _closure(system: RootSystem, generators: Sequence[WeylElement], cap: int) -> list[WeylElement]:
    start = identity(system)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for g in generators:
            nxt = multiply(current, g)
            if nxt in seen:
                continue
            seen.add(nxt)
            order.append(nxt)
            if len(order) > cap:
                raise SubgroupTooLargeError(f"group generated in {system.label} exceeds {cap} elements")
            queue.append(nxt)
    return order


@dataclass(frozen=True)
class ReflectionSubgroup:
    system: RootSystem
    generators: tuple[WeylElement, ...]
    phi_positive: tuple[RootVec, ...]
    delta: tuple[RootVec, ...]
    cartan: np.ndarray = field(compare=False)

    @property
    def labels(self) -> tuple:
        return classify_cartan(self.cartan)

    @property
    def simple_reflections(self) -> tuple[WeylElement, ...]:
        return tuple(reflection(self.system, root) for root in self.delta)

    def contains_root(self, root: RootVec) -> bool:
        coords = root.coords if root.is_positive else (-root).coords
        return coords in {r.coords for r in self.phi_positive}

    def contains(self, w: WeylElement) -> bool:
        """w lies in W_A iff its A-decomposition has trivial coset part."""
        return a_decomposition(w, self)[1].is_identity


def reflection_subgroup(system: RootSystem, generators: Iterable[WeylElement]) -> ReflectionSubgroup:
    gens = tuple(generators)
    roots: list[RootVec] = []
    for g in gens:
        if g.system is not system:
            raise SystemMismatchError(f"generator from {g.system.label} in {system.label}")
        root = is_reflection(g)
        if root is None:
            raise NotAReflectionError(f"{g!r} is not a reflection")
        roots.append(root)

    phi = {r.coords for r in roots} | {(-r).coords for r in roots}
    queue = deque(phi)
    while queue:
        beta = RootVec(queue.popleft())
        for alpha in list(phi):
            image = act(reflection(system, RootVec(alpha)), beta)
            if image.coords not in phi:
                phi.add(image.coords)
                phi.add((-image).coords)
                queue.append(image.coords)
                queue.append((-image).coords)

    positive = tuple(r for r in system.positive_roots if r.coords in phi)
    delta = []
    for alpha in positive:
        inversions = {r.coords for r in inversion_set(reflection(system, alpha))}
        if inversions & {r.coords for r in positive} == {alpha.coords}:
            delta.append(alpha)
    k = len(delta)
    cartan = np.array(
        [[int(coroot_pairing(system, delta[j], delta[i])) for j in range(k)] for i in range(k)],
        dtype=np.int64,
    ).reshape(k, k)
    return ReflectionSubgroup(system, gens, positive, tuple(delta), cartan)


def parabolic_subgroup(system: RootSystem, indices: Iterable[int]) -> ReflectionSubgroup:
    return reflection_subgroup(system, [simple_reflection(system, i) for i in sorted(set(indices))])


def subgroup_elements(
    group: ReflectionSubgroup, cap: int | None = None, *, settings: Settings | None = None
) -> list[WeylElement]:
    if not group.delta:
        return [identity(group.system)]
    return _closure(group.system, group.simple_reflections, _subgroup_cap(cap, settings))


def a_decomposition(w: WeylElement, group: ReflectionSubgroup) -> tuple[WeylElement, WeylElement]:
    """Split w = w_A * rest with w_A in W_A and N(rest) disjoint from Phi_A."""
    system = w.system
    w_a = identity(system)
    current = w
    while True:
        inv = inverse(current).matrix
        for alpha in group.delta:
            image = inv @ np.asarray(alpha.coords, dtype=np.int64)
            if np.all(image <= 0):
                s_alpha = reflection(system, alpha)
                current = multiply(s_alpha, current)
                w_a = multiply(w_a, s_alpha)
                break
        else:
            return w_a, current


def utopic_check(
    w: WeylElement, group: ReflectionSubgroup, cap: int | None = None, *, settings: Settings | None = None
) -> bool:
    """True iff x -> (w x)_A maps w W_A w^-1 bijectively onto W_A."""
    elements = subgroup_elements(group, cap, settings=settings)
    w_inv = inverse(w)
    images = set()
    for x in elements:
        y = multiply(multiply(w, x), w_inv)
        images.add(a_decomposition(multiply(w, y), group)[0])
    return len(images) == len(elements)


def utopic_count(system: RootSystem, indices: Iterable[int], *, settings: Settings | None = None) -> int:
    """Number of I-utopic elements of W for the standard parabolic I."""
    group = parabolic_subgroup(system, indices)
    elements = enumerate_group(system, settings=settings)
    return sum(1 for w in elements if utopic_check(w, group, settings=settings))
