"""Partitions, (n+1)-cores and the residue action realizing the orbit of Lambda_0."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from atomic.config import Settings, get_settings
from atomic.domain.exceptions import (
    DimensionMismatchError,
    InvalidIndexError,
    InvalidModulusError,
    NotACoreError,
    SizeTooLargeError,
)
from atomic.domain.affine import level_one_image
from atomic.domain.enums import Family
from atomic.domain.rootdata import TypeLabel, build_root_system

Cell = tuple[int, int]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise DimensionMismatchError(f"{list(parts)} is not a partition")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset((r, c) for r, part in enumerate(self.parts) for c in range(part))

    @cached_property
    def conjugate(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0]))

    def hook_length(self, cell: Cell) -> int:
        r, c = cell
        return self.parts[r] - c + self.conjugate[c] - r - 1

    def hook_lengths(self) -> list[int]:
        return [self.hook_length(cell) for cell in sorted(self.cells)]

    @cached_property
    def beta_numbers(self) -> frozenset[int]:
        """First-column hook lengths."""
        k = len(self.parts)
        return frozenset(part + k - 1 - i for i, part in enumerate(self.parts))

    def addable_cells(self) -> list[Cell]:
        cells = []
        for r in range(len(self.parts) + 1):
            c = self.parts[r] if r < len(self.parts) else 0
            if r == 0 or self.parts[r - 1] > c:
                cells.append((r, c))
        return cells

    def removable_cells(self) -> list[Cell]:
        return [
            (r, part - 1)
            for r, part in enumerate(self.parts)
            if r == len(self.parts) - 1 or self.parts[r + 1] < part
        ]


def from_cells(cells: set[Cell] | frozenset[Cell]) -> Partition:
    rows: dict[int, int] = {}
    for r, _ in cells:
        rows[r] = rows.get(r, 0) + 1
    parts = tuple(rows.get(r, 0) for r in range(max(rows, default=-1) + 1))
    partition = Partition(parts)
    if partition.cells != frozenset(cells):
        raise DimensionMismatchError("cells do not form a Young diagram")
    return partition


def residue(cell: Cell, modulus: int) -> int:
    r, c = cell
    return (c - r) % modulus


def _check_modulus(m: int) -> None:
    if m < 2:
        raise InvalidModulusError(f"modulus must be at least 2, got {m}")


def is_core(p: Partition, m: int) -> bool:
    """No hook length divisible by m, checked on the beta-numbers abacus."""
    _check_modulus(m)
    beads = p.beta_numbers
    return all(b - m in beads for b in beads if b >= m)


def is_core_by_hooks(p: Partition, m: int) -> bool:
    _check_modulus(m)
    return all(h % m for h in p.hook_lengths())


def has_removable_rim_hook(p: Partition, m: int) -> bool:
    """Literal search: some m consecutive rim cells whose removal leaves a partition."""
    _check_modulus(m)
    rim = sorted(
        ((r, c) for r, c in p.cells if (r + 1, c + 1) not in p.cells),
        key=lambda cell: cell[1] - cell[0],
    )
    for start in range(len(rim) - m + 1):
        strip = rim[start : start + m]
        contents = [c - r for r, c in strip]
        if contents != list(range(contents[0], contents[0] + m)):
            continue
        try:
            from_cells(p.cells - set(strip))
        except DimensionMismatchError:
            continue
        return True
    return False


def residue_reflect(p: Partition, i: int, n: int) -> Partition:
    """s_i on an (n+1)-core: add every addable i-cell, else remove every removable i-cell."""
    modulus = n + 1
    if not 0 <= i <= n:
        raise InvalidIndexError(f"residue {i} outside 0..{n}")
    if not is_core(p, modulus):
        raise NotACoreError(f"{p} is not a {modulus}-core")
    addable = [cell for cell in p.addable_cells() if residue(cell, modulus) == i]
    if addable:
        return from_cells(p.cells | set(addable))
    removable = [cell for cell in p.removable_cells() if residue(cell, modulus) == i]
    if removable:
        return from_cells(p.cells - set(removable))
    return p


def core_vector(p: Partition, m: int) -> np.ndarray:
    """Runner levels N_j of an m-core on the m-runner abacus; sum(N) == 0."""
    if not is_core(p, m):
        raise NotACoreError(f"{p} is not a {m}-core")
    k = len(p.parts)
    beads = [part - r for r, part in enumerate(p.parts, start=1)] + list(range(-k - m, -k))
    top = np.full(m, np.iinfo(np.int64).min, dtype=np.int64)
    for bead in beads:
        top[bead % m] = max(top[bead % m], bead)
    return (top - np.arange(m)) // m + 1


def partition_from_vector(vector: np.ndarray) -> Partition:
    vector = np.asarray(vector, dtype=np.int64)
    m = len(vector)
    if int(vector.sum()) != 0:
        raise DimensionMismatchError(f"abacus vector {vector.tolist()} has nonzero charge")
    lo = int(vector.min()) - 1
    beads = np.sort(np.concatenate([j + m * np.arange(lo, int(vector[j])) for j in range(m)]))[::-1]
    parts = beads + np.arange(1, len(beads) + 1)
    return Partition(tuple(int(p) for p in parts if p > 0))


def reflect_core_vectors(vectors: np.ndarray, i: int) -> np.ndarray:
    """s_i on a stack of abacus vectors, one core per row."""
    vectors = np.atleast_2d(vectors)
    m = vectors.shape[1]
    if not 0 <= i < m:
        raise InvalidIndexError(f"residue {i} outside 0..{m - 1}")
    image = vectors.copy()
    if i == 0:
        image[:, 0] = vectors[:, m - 1] + 1
        image[:, m - 1] = vectors[:, 0] - 1
    else:
        image[:, [i - 1, i]] = vectors[:, [i, i - 1]]
    return image


def core_vector_sizes(vectors: np.ndarray) -> np.ndarray:
    vectors = np.atleast_2d(vectors)
    m = vectors.shape[1]
    return (m * (vectors**2).sum(axis=1) + 2 * (vectors @ np.arange(m))) // 2


def core_vectors(n: int, max_size: int, *, settings: Settings | None = None) -> np.ndarray:
    """Abacus vectors of all (n+1)-cores of size <= max_size, layer by layer from the empty core."""
    settings = settings or get_settings()
    if n < 1:
        raise InvalidIndexError(f"n must be at least 1, got {n}")
    if max_size > settings.core_size_cap:
        raise SizeTooLargeError(f"max size {max_size} exceeds the configured cap {settings.core_size_cap}")
    m = n + 1
    frontier = np.zeros((1, m), dtype=np.int64)
    layers = [frontier]
    while len(frontier):
        sizes = core_vector_sizes(frontier)
        grown = []
        for i in range(m):
            image = reflect_core_vectors(frontier, i)
            image_sizes = core_vector_sizes(image)
            grown.append(image[(image_sizes > sizes) & (image_sizes <= max_size)])
        merged = np.concatenate(grown)
        if not len(merged):
            break
        # cores in one layer share their coset length, so duplicates only occur within a layer
        frontier = np.unique(merged, axis=0)
        layers.append(frontier)
    found = np.concatenate(layers)
    logger.debug("core orbit n=%s max_size=%s layers=%s cores=%s", n, max_size, len(layers), len(found))
    return found


def core_size_counts(n: int, max_size: int, *, settings: Settings | None = None) -> dict[int, int]:
    counts = np.bincount(core_vector_sizes(core_vectors(n, max_size, settings=settings)), minlength=max_size + 1)
    return {size: int(c) for size, c in enumerate(counts) if c}


def orbit_cores(n: int, max_size: int, *, settings: Settings | None = None) -> dict[int, list[Partition]]:
    """All (n+1)-cores of size <= max_size, grouped by size and sorted lexicographically."""
    grouped: dict[int, list[Partition]] = {}
    for vector in core_vectors(n, max_size, settings=settings):
        core = partition_from_vector(vector)
        grouped.setdefault(core.size, []).append(core)
    return {size: sorted(grouped[size], key=lambda q: q.parts, reverse=True) for size in sorted(grouped)}


def partitions_of(size: int) -> Iterator[Partition]:
    def build(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for tail in build(remaining - part, part):
                yield (part, *tail)

    for parts in build(size, size):
        yield Partition(parts)


def cores_by_filter(n: int, max_size: int) -> dict[int, list[Partition]]:
    result = {}
    for size in range(max_size + 1):
        cores = [p for p in partitions_of(size) if is_core(p, n + 1)]
        if cores:
            result[size] = cores
    return result


def core_count_vs_lattice(n: int, size: int, *, settings: Settings | None = None) -> tuple[int, int]:
    cores = core_size_counts(n, size, settings=settings).get(size, 0)
    lattice = level_one_image(build_root_system(TypeLabel(Family.A, n, affine=True)), size)
    return cores, lattice.get(size, 0)
