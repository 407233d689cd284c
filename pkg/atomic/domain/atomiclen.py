"""Atomic length, lambda-atomic length, lambda-inversion sets and image sets.

Image sets are computed on the weight orbit rather than on the group: the
value L_lambda(w) = <lambda - w(lambda), rho^vee> only depends on w(lambda),
and the orbit is walked upward from lambda one simple reflection at a time.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from atomic.config import Settings, get_settings
from atomic.domain.enums import Family
from atomic.domain.exceptions import NotDominantError, OrbitTooLargeError, PreconditionViolationError
from atomic.domain.rootdata import (
    RootSystem,
    RootVec,
    TypeLabel,
    WeightVec,
    coroot_pairing,
    fundamental_weight,
    height,
    parabolic_order,
    sub_cartan,
)
from atomic.domain.weyl import (
    WeylElement,
    act,
    inverse,
    inversion_set_from_word,
    longest_element,
    reduced_word,
)
from atomic.schemas.reports import ImageReport

logger = logging.getLogger(__name__)


def integral_fund_coords(w: WeightVec) -> tuple[int, ...]:
    if any(Fraction(m).denominator != 1 for m in w.fund_coords):
        raise NotDominantError(f"weight {list(map(str, w.fund_coords))} is not integral")
    if not w.is_dominant:
        raise NotDominantError(f"weight {list(map(str, w.fund_coords))} has a negative coordinate")
    return tuple(int(m) for m in w.fund_coords)


def atomic_length(w: WeylElement) -> int:
    images = inverse(w).matrix @ w.system.roots_matrix
    mask = np.all(images <= 0, axis=0)
    return int(w.system.roots_matrix[:, mask].sum())


def lambda_atomic_length(w: WeylElement, lam: WeightVec) -> int:
    integral_fund_coords(lam)
    value = height(lam) - height(act(w, lam))
    return int(value)


@dataclass(frozen=True)
class LambdaInversion:
    letter: int
    occurrence: int
    multiplier: int
    root: RootVec

    @property
    def scaled(self) -> RootVec:
        return self.root.scaled(self.multiplier)


@dataclass(frozen=True)
class LambdaInversionSet:
    entries: tuple[LambdaInversion, ...]
    source_word: tuple[int, ...]
    rank: int

    def total(self) -> RootVec:
        result = RootVec((0,) * self.rank)
        for entry in self.entries:
            result = result + entry.scaled
        return result

    @property
    def atomic_length(self) -> int:
        return sum(entry.multiplier * int(height(entry.root)) for entry in self.entries)

    def as_multiset(self) -> list[tuple[int, tuple[int, ...]]]:
        return sorted((entry.multiplier, entry.root.coords) for entry in self.entries)


def lambda_inversion_set(system: RootSystem, word: Sequence[int], lam: WeightVec) -> LambdaInversionSet:
    multipliers = integral_fund_coords(lam)
    roots = inversion_set_from_word(system, word)
    occurrences: dict[int, int] = {}
    entries = []
    for letter, root in zip(word, roots):
        occurrences[letter] = occurrences.get(letter, 0) + 1
        entries.append(LambdaInversion(letter, occurrences[letter], multipliers[letter - 1], root))
    return LambdaInversionSet(tuple(entries), tuple(word), system.rank)


@dataclass(frozen=True)
class OrbitLayers:
    depth_counts: dict[int, int]
    orbit_size: int
    layers: int
    complete: bool
    frontier_min_depth: int | None


def _expand(frontier: np.ndarray, cartan: np.ndarray, j: int) -> np.ndarray:
    n = cartan.shape[0]
    mask = frontier[:, j] > 0
    if not mask.any():
        return np.empty((0, n + 1), dtype=np.int64)
    parents = frontier[mask]
    p = parents[:, j]
    children = parents.copy()
    children[:, :n] -= p[:, None] * cartan[:, j][None, :]
    children[:, n] += p
    return children


def orbit_depth_layers(
    cartan: np.ndarray,
    start: Sequence[int],
    *,
    cap: int,
    max_layers: int | None = None,
    threads: int = 1,
) -> OrbitLayers:
    """Walk the orbit of a dominant weight given by its pairings with the simple coroots.

    Each orbit point mu is reached from lambda only through steps
    mu -> s_j(mu) with <mu, alpha_j^vee> > 0, and every such path to mu has
    the same number of steps, so layers are disjoint and only need
    deduplication within themselves.

    Parameters
    ----------
    cartan : ndarray
        Cartan matrix (finite or affine) with a_ij = <alpha_j, alpha_i^vee>.
    start : sequence of int
        Nonnegative pairings of the starting weight.
    cap : int
        Maximum number of orbit points visited.
    max_layers : int, optional
        Stop after this many layers; the last layer is then left unexpanded.
    threads : int
        Worker threads for the per-generator expansion.
    """
    cartan = np.asarray(cartan, dtype=np.int64)
    n = cartan.shape[0]
    frontier = np.array([[*start, 0]], dtype=np.int64)
    counts: dict[int, int] = {0: 1}
    total = 1
    layer = 0
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while True:
            can_move = bool((frontier[:, :n] > 0).any())
            if not can_move:
                return OrbitLayers(counts, total, layer, True, None)
            if max_layers is not None and layer >= max_layers:
                return OrbitLayers(counts, total, layer, False, int(frontier[:, n].min()))
            if executor is not None:
                pieces = list(executor.map(lambda j: _expand(frontier, cartan, j), range(n)))
            else:
                pieces = [_expand(frontier, cartan, j) for j in range(n)]
            frontier = np.unique(np.concatenate(pieces), axis=0)
            layer += 1
            total += frontier.shape[0]
            if total > cap:
                raise OrbitTooLargeError(f"orbit exceeds {cap} states at layer {layer}")
            depths, sizes = np.unique(frontier[:, n], return_counts=True)
            for depth, size in zip(depths.tolist(), sizes.tolist()):
                counts[depth] = counts.get(depth, 0) + size
            logger.debug("orbit layer index=%s size=%s total=%s", layer, frontier.shape[0], total)
    finally:
        if executor is not None:
            executor.shutdown()


def atomic_length_w0(system: RootSystem, lam: WeightVec) -> int:
    return lambda_atomic_length(longest_element(system), lam)


def expected_w0_atomic_length(label: TypeLabel) -> int:
    """Closed forms for L(w0) = 2 <rho, rho^vee>."""
    n = label.rank
    match label.family:
        case Family.A:
            return n * (n + 1) * (n + 2) // 6
        case Family.B | Family.C:
            return n * (n + 1) * (4 * n - 1) // 6
        case Family.D:
            return n * (n - 1) * (2 * n - 1) // 3
        case Family.E:
            return {6: 156, 7: 399, 8: 1240}[n]
        case Family.F:
            return 110
        case Family.G:
            return 16


def image_set(
    system: RootSystem,
    lam: WeightVec,
    *,
    settings: Settings | None = None,
    stress: bool = False,
    threads: int | None = None,
) -> ImageReport:
    settings = settings or get_settings()
    start = integral_fund_coords(lam)
    cap = 2**62 if stress else settings.orbit_cap
    layers = orbit_depth_layers(system.cartan, start, cap=cap, threads=threads or settings.threads)
    stabilizer = parabolic_order(system, [i + 1 for i, m in enumerate(start) if m == 0])
    logger.info(
        "image computed type=%s weight=%s orbit_size=%s stabilizer=%s",
        system.label,
        list(start),
        layers.orbit_size,
        stabilizer,
    )
    return ImageReport.from_values(
        type=str(system.label),
        weight=list(start),
        values=layers.depth_counts.keys(),
        orbit_size=layers.orbit_size,
        max_value=atomic_length_w0(system, lam),
        element_counts={d: c * stabilizer for d, c in sorted(layers.depth_counts.items())},
    )


def is_ideal(system: RootSystem, lam: WeightVec, *, settings: Settings | None = None) -> tuple[bool, ImageReport | None]:
    coords = integral_fund_coords(lam)
    if coords and all(m >= 2 for m in coords):
        # value 1 needs some m_i = 1
        return False, None
    report = image_set(system, lam, settings=settings)
    return report.is_interval, report


def minuscule_weights(system: RootSystem) -> list[WeightVec]:
    result = []
    for i in range(1, system.rank + 1):
        omega = fundamental_weight(system, i)
        if all(coroot_pairing(system, omega, root) <= 1 for root in system.positive_roots):
            result.append(omega)
    return result


def rho_minus_image(w: WeylElement) -> RootVec:
    """rho - w(rho) as a root-lattice vector."""
    diff = [a - b for a, b in zip(w.system.rho.root_coords, act(w, w.system.rho).root_coords)]
    return RootVec(tuple(int(x) for x in diff))


def word_atomic_length(cartan: np.ndarray, word: Sequence[int]) -> int:
    """Atomic length of a reduced word computed from a bare Cartan matrix."""
    cartan = np.asarray(cartan, dtype=np.int64)
    k = cartan.shape[0]
    reflections = []
    for i in range(k):
        matrix = np.eye(k, dtype=np.int64)
        matrix[i, :] -= cartan[i, :]
        reflections.append(matrix)
    prefix = np.eye(k, dtype=np.int64)
    total = 0
    for letter in word:
        total += int(prefix[:, letter - 1].sum())
        prefix = prefix @ reflections[letter - 1]
    return total


def parabolic_atomic_length(w: WeylElement, indices: Sequence[int]) -> int:
    """L_I(w) computed in the standalone Coxeter system (W_I, S_I)."""
    allowed = sorted(set(indices))
    word = reduced_word(w)
    if any(letter not in allowed for letter in word):
        raise PreconditionViolationError(f"element {list(word)} is not in the parabolic subgroup {allowed}")
    position = {letter: k + 1 for k, letter in enumerate(allowed)}
    return word_atomic_length(sub_cartan(w.system, allowed), [position[letter] for letter in word])
