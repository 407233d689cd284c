"""Exact root-system and Cartan data for the finite crystallographic types
and their untwisted affinizations.

Conventions: a_ij = <alpha_j, alpha_i^vee>, simple roots labelled as in
Bourbaki's planches, every vector stored in simple-root coordinates, and the
invariant form normalized so that the highest root has (theta|theta) = 2.
"""

from __future__ import annotations

import re
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial, prod

import numpy as np
import sympy

from atomic.domain.enums import Family
from atomic.domain.exceptions import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InvalidTypeError,
    UnsupportedTypeError,
)


_TYPE_PATTERN = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*(~|\^\(1\))?\s*$")


@dataclass(frozen=True)
class TypeLabel:
    family: Family
    rank: int
    affine: bool = False

    def __post_init__(self) -> None:
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        rank = self.rank
        valid = {
            Family.A: rank >= 1,
            Family.B: rank >= 2,
            Family.C: rank >= 2,
            Family.D: rank >= 4,
            Family.E: rank in (6, 7, 8),
            Family.F: rank == 4,
            Family.G: rank == 2,
        }[family]
        if not valid:
            raise InvalidTypeError(f"no root system of type {family.value}{rank}")

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}{'~' if self.affine else ''}"

    def finite(self) -> TypeLabel:
        return TypeLabel(self.family, self.rank)


def parse_type(text: str) -> TypeLabel:
    match = _TYPE_PATTERN.match(text)
    if match is None:
        raise InvalidTypeError(f"cannot parse type string {text!r}")
    family, rank, suffix = match.groups()
    return TypeLabel(Family(family.upper()), int(rank), affine=suffix is not None)


@dataclass(frozen=True)
class RootVec:
    coords: tuple[int, ...]

    @property
    def is_positive(self) -> bool:
        return any(c > 0 for c in self.coords) and all(c >= 0 for c in self.coords)

    @property
    def is_negative(self) -> bool:
        return any(c < 0 for c in self.coords) and all(c <= 0 for c in self.coords)

    def __neg__(self) -> RootVec:
        return RootVec(tuple(-c for c in self.coords))

    def __add__(self, other: RootVec) -> RootVec:
        _check_dims(self.coords, other.coords)
        return RootVec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: RootVec) -> RootVec:
        return self + (-other)

    def scaled(self, factor: int) -> RootVec:
        return RootVec(tuple(factor * c for c in self.coords))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            coefficient = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign}{coefficient}a{i}")
        if not terms:
            return "0"
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


@dataclass(frozen=True)
class WeightVec:
    fund_coords: tuple[Fraction, ...]
    root_coords: tuple[Fraction, ...]

    @property
    def is_dominant(self) -> bool:
        return all(m >= 0 for m in self.fund_coords)


def _check_dims(x: Sequence, y: Sequence) -> None:
    if len(x) != len(y):
        raise DimensionMismatchError(f"vectors of length {len(x)} and {len(y)}")


def _coords(v: RootVec | WeightVec | Sequence) -> tuple:
    if isinstance(v, RootVec):
        return v.coords
    if isinstance(v, WeightVec):
        return v.root_coords
    return tuple(v)


def height(v: RootVec | WeightVec | Sequence) -> Fraction | int:
    """Sum of simple-root coordinates, i.e. the pairing with rho^vee."""
    return sum(_coords(v), 0)


def cartan_matrix(label: TypeLabel) -> np.ndarray:
    n = label.rank
    a = 2 * np.eye(n, dtype=np.int64)

    def bond(i: int, j: int, a_ij: int = -1, a_ji: int = -1) -> None:
        a[i - 1, j - 1] = a_ij
        a[j - 1, i - 1] = a_ji

    family = label.family
    if family in (Family.A, Family.B, Family.C):
        for i in range(1, n):
            bond(i, i + 1)
        if family is Family.B:
            bond(n - 1, n, -1, -2)
        elif family is Family.C:
            bond(n - 1, n, -2, -1)
    elif family is Family.D:
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif family is Family.E:
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    elif family is Family.F:
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif family is Family.G:
        bond(1, 2, -3, -1)
    return a


def _positive_roots(cartan: np.ndarray) -> list[tuple[int, ...]]:
    n = cartan.shape[0]
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        root = queue.popleft()
        for i in range(n):
            p = int(sum(int(cartan[i, j]) * root[j] for j in range(n)))
            if p == 0:
                continue
            image = tuple(root[j] - (p if j == i else 0) for j in range(n))
            if all(c >= 0 for c in image) and any(c > 0 for c in image) and image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen, key=lambda r: (sum(r), tuple(-c for c in r)))


def _raw_symmetrizer(cartan: np.ndarray) -> list[Fraction]:
    n = cartan.shape[0]
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if i != j and cartan[i, j] != 0 and d[j] is None:
                    d[j] = d[i] * int(cartan[i, j]) / int(cartan[j, i])
                    queue.append(j)
    return [x for x in d if x is not None]


def _components(cartan: np.ndarray) -> list[list[int]]:
    n = cartan.shape[0]
    remaining = set(range(n))
    components = []
    while remaining:
        start = min(remaining)
        component = {start}
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j not in component and cartan[i, j] != 0:
                    component.add(j)
                    queue.append(j)
        remaining -= component
        components.append(sorted(component))
    return components


def _classify_irreducible(cartan: np.ndarray) -> TypeLabel:
    r = cartan.shape[0]
    count = len(_positive_roots(cartan))
    simply_laced = all(cartan[i, j] in (0, -1) for i in range(r) for j in range(r) if i != j)
    if simply_laced:
        if count == r * (r + 1) // 2:
            return TypeLabel(Family.A, r)
        if r >= 4 and count == r * (r - 1):
            return TypeLabel(Family.D, r)
        if (r, count) in ((6, 36), (7, 63), (8, 120)):
            return TypeLabel(Family.E, r)
    elif r == 2 and count == 6:
        return TypeLabel(Family.G, 2)
    elif r == 4 and count == 24:
        return TypeLabel(Family.F, 4)
    elif count == r * r:
        d = _raw_symmetrizer(cartan)
        short = sum(1 for x in d if x == min(d))
        return TypeLabel(Family.B if short == 1 else Family.C, r)
    raise InvalidTypeError(f"unrecognized Cartan matrix of rank {r} with {count} positive roots")


def classify_cartan(cartan: np.ndarray) -> tuple[TypeLabel, ...]:
    """Cartan type of each connected component, in order of smallest node."""
    cartan = np.asarray(cartan, dtype=np.int64)
    if cartan.size == 0:
        return ()
    return tuple(_classify_irreducible(cartan[np.ix_(c, c)]) for c in _components(cartan))


def weyl_group_order(label: TypeLabel) -> int:
    n = label.rank
    match label.family:
        case Family.A:
            return factorial(n + 1)
        case Family.B | Family.C:
            return 2**n * factorial(n)
        case Family.D:
            return 2 ** (n - 1) * factorial(n)
        case Family.E:
            return {6: 51840, 7: 2903040, 8: 696729600}[n]
        case Family.F:
            return 1152
        case Family.G:
            return 12


class RootSystem:
    """Finite root system of one Cartan type, optionally flagged affine.

    Instances are immutable and shared through ``build_root_system``.
    """

    def __init__(self, label: TypeLabel):
        self.label = label
        self.rank = label.rank
        self.cartan = cartan_matrix(label)
        self.cartan.setflags(write=False)
        self.positive_roots: tuple[RootVec, ...] = tuple(RootVec(r) for r in _positive_roots(self.cartan))
        self.roots_matrix = np.array([r.coords for r in self.positive_roots], dtype=np.int64).T
        self.roots_matrix.setflags(write=False)
        self.root_index = {r.coords: k for k, r in enumerate(self.positive_roots)}
        self.highest_root = self.positive_roots[-1]

        raw = _raw_symmetrizer(self.cartan)
        theta = self.highest_root.coords
        norm = sum(theta[i] * theta[j] * raw[i] * int(self.cartan[i, j]) for i in range(self.rank) for j in range(self.rank))
        scale = Fraction(2) / norm
        self.symmetrizer: tuple[Fraction, ...] = tuple(x * scale for x in raw)

        inverse = sympy.Matrix(self.cartan.tolist()).inv()
        self.inverse_cartan: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(self.rank))
            for i in range(self.rank)
        )
        rho = [Fraction(0)] * self.rank
        for root in self.positive_roots:
            for i, c in enumerate(root.coords):
                rho[i] += Fraction(c, 2)
        self.rho = WeightVec(tuple(Fraction(1) for _ in range(self.rank)), tuple(rho))

        self.marks: tuple[int, ...] = (1, *theta)
        self.comarks: tuple[int, ...] = (1, *(int(theta[i] * self.symmetrizer[i]) for i in range(self.rank)))
        self.coxeter_number = sum(self.marks)
        self.dual_coxeter_number = sum(self.comarks)

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"

    @property
    def finite_label(self) -> TypeLabel:
        return self.label.finite()

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(
            tuple(self.symmetrizer[i] * int(self.cartan[i, j]) for j in range(self.rank)) for i in range(self.rank)
        )

    @cached_property
    def long_roots(self) -> tuple[RootVec, ...]:
        return tuple(r for r in self.positive_roots if inner_product(self, r, r) == 2)

    @cached_property
    def affine_cartan(self) -> np.ndarray:
        """Untwisted affine Cartan matrix, node 0 first."""
        n = self.rank
        theta = self.highest_root
        a = np.zeros((n + 1, n + 1), dtype=np.int64)
        a[1:, 1:] = self.cartan
        a[0, 0] = 2
        for j in range(1, n + 1):
            simple = RootVec(tuple(int(k == j - 1) for k in range(n)))
            a[0, j] = -int(inner_product(self, simple, theta))
            a[j, 0] = -int(pairing(self, theta, j))
        a.setflags(write=False)
        return a

    def simple_root(self, i: int) -> RootVec:
        self._check_index(i)
        return RootVec(tuple(int(k == i - 1) for k in range(self.rank)))

    def is_root(self, v: RootVec) -> bool:
        return v.coords in self.root_index or (-v).coords in self.root_index

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRangeError(f"simple index {i} outside 1..{self.rank} for {self.label}")


@lru_cache(maxsize=None)
def build_root_system(label: TypeLabel) -> RootSystem:
    return RootSystem(label)


def root_system(text: str) -> RootSystem:
    return build_root_system(parse_type(text))


def weight(system: RootSystem, fund_coords: Iterable[int | Fraction]) -> WeightVec:
    fund = tuple(Fraction(m) for m in fund_coords)
    _check_dims(fund, range(system.rank))
    root = tuple(sum((row[j] * fund[j] for j in range(system.rank)), Fraction(0)) for row in system.inverse_cartan)
    return WeightVec(fund, root)


def weight_from_root_coords(system: RootSystem, root_coords: Iterable[int | Fraction]) -> WeightVec:
    root = tuple(Fraction(x) for x in root_coords)
    _check_dims(root, range(system.rank))
    fund = tuple(sum((int(system.cartan[i, j]) * root[j] for j in range(system.rank)), Fraction(0)) for i in range(system.rank))
    return WeightVec(fund, root)


def fundamental_weight(system: RootSystem, i: int) -> WeightVec:
    system._check_index(i)
    return weight(system, [int(k == i - 1) for k in range(system.rank)])


def is_dominant(w: WeightVec) -> bool:
    return w.is_dominant


def pairing(system: RootSystem, x: RootVec | WeightVec | Sequence, i: int) -> Fraction | int:
    system._check_index(i)
    coords = _coords(x)
    _check_dims(coords, range(system.rank))
    return sum((int(system.cartan[i - 1, j]) * coords[j] for j in range(system.rank)), 0)


def inner_product(system: RootSystem, x: RootVec | WeightVec | Sequence, y: RootVec | WeightVec | Sequence) -> Fraction:
    xs, ys = _coords(x), _coords(y)
    _check_dims(xs, ys)
    _check_dims(xs, range(system.rank))
    gram = system.gram
    return sum(
        (gram[i][j] * xs[i] * ys[j] for i in range(system.rank) if xs[i] for j in range(system.rank) if ys[j]),
        Fraction(0),
    )


def coroot_pairing(system: RootSystem, x: RootVec | WeightVec | Sequence, root: RootVec) -> Fraction:
    """<x, root^vee> = 2 (x|root) / (root|root)."""
    return 2 * inner_product(system, x, root) / inner_product(system, root, root)


def from_epsilon(system: RootSystem, eps: Sequence[int | Fraction]) -> RootVec:
    """Classical epsilon coordinates to simple-root coordinates (types A to D)."""
    n = system.rank
    family = system.label.family
    partial = [sum(eps[: k + 1], 0) for k in range(len(eps))]
    if family is Family.A:
        if len(eps) != n + 1:
            raise DimensionMismatchError(f"type A{n} uses {n + 1} epsilon coordinates")
        if partial[n] != 0:
            raise DimensionMismatchError(f"{list(eps)} does not sum to zero")
        coords = partial[:n]
    elif family in (Family.B, Family.C, Family.D):
        if len(eps) != n:
            raise DimensionMismatchError(f"type {system.label} uses {n} epsilon coordinates")
        coords = partial[:]
        if family is Family.C:
            coords[n - 1] = Fraction(partial[n - 1], 2)
        elif family is Family.D:
            coords[n - 2] = Fraction(partial[n - 2] - eps[n - 1], 2)
            coords[n - 1] = Fraction(partial[n - 2] + eps[n - 1], 2)
    else:
        raise UnsupportedTypeError(f"no epsilon model for type {system.label}")
    if any(Fraction(c).denominator != 1 for c in coords):
        raise DimensionMismatchError(f"{list(eps)} is not in the root lattice of {system.label}")
    return RootVec(tuple(int(c) for c in coords))


def sub_cartan(system: RootSystem, indices: Iterable[int]) -> np.ndarray:
    idx = sorted(set(indices))
    for i in idx:
        system._check_index(i)
    zero_based = [i - 1 for i in idx]
    return system.cartan[np.ix_(zero_based, zero_based)]


def parabolic_order(system: RootSystem, indices: Iterable[int]) -> int:
    return prod((weyl_group_order(label) for label in classify_cartan(sub_cartan(system, indices))), start=1)
