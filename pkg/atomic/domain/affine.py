"""Untwisted affine Weyl groups.

An element is stored as the affine map x -> M x + beta on the finite root
space (simple-root coordinates), with s_0 the reflection in the hyperplane
(theta | x) = 1. The weight action follows the Kac-Moody conventions with
alpha_0 = delta - theta and <delta, rho^vee> = a_0 + ... + a_n = h.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from atomic.config import Settings, get_settings
from atomic.domain.atomiclen import orbit_depth_layers
from atomic.domain.exceptions import (
    InvalidIndexError,
    NotDominantError,
    PreconditionViolationError,
    RadiusTooLargeError,
    UnsupportedTypeError,
)
from atomic.domain.rootdata import (
    RootSystem,
    RootVec,
    height,
    inner_product,
    pairing,
    weight,
)
from atomic.domain.weyl import (
    WeylElement,
    act,
    identity,
    inverse,
    multiply,
    reduced_word,
    reflection,
    simple_reflection,
)
from atomic.schemas.reports import ImageReport

logger = logging.getLogger(__name__)


def require_affine(system: RootSystem) -> None:
    if not system.label.affine:
        raise UnsupportedTypeError(f"type {system.label} is not an affine type")


@dataclass(frozen=True)
class AffineElement:
    system: RootSystem
    beta: tuple[int, ...]
    finite: WeylElement
    word: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def is_identity(self) -> bool:
        return not any(self.beta) and self.finite.is_identity

    @property
    def gamma(self) -> tuple[int, ...]:
        """w-bar^-1(beta), so that w = w-bar * translation by gamma."""
        return act(inverse(self.finite), RootVec(self.beta)).coords


def affine_identity(system: RootSystem) -> AffineElement:
    require_affine(system)
    return AffineElement(system, (0,) * system.rank, identity(system), ())


def affine_generator(system: RootSystem, i: int) -> AffineElement:
    require_affine(system)
    if not 0 <= i <= system.rank:
        raise InvalidIndexError(f"affine index {i} outside 0..{system.rank} for {system.label}")
    if i == 0:
        theta = system.highest_root
        return AffineElement(system, theta.coords, reflection(system, theta), (0,))
    return AffineElement(system, (0,) * system.rank, simple_reflection(system, i), (i,))


def affine_multiply(u: AffineElement, v: AffineElement) -> AffineElement:
    shifted = u.finite.matrix @ np.asarray(v.beta, dtype=np.int64)
    beta = tuple(int(a + b) for a, b in zip(u.beta, shifted))
    word = u.word + v.word if u.word is not None and v.word is not None else None
    return AffineElement(u.system, beta, multiply(u.finite, v.finite), word)


def affine_inverse(w: AffineElement) -> AffineElement:
    inv = inverse(w.finite)
    beta = tuple(int(-x) for x in inv.matrix @ np.asarray(w.beta, dtype=np.int64))
    word = tuple(reversed(w.word)) if w.word is not None else None
    return AffineElement(w.system, beta, inv, word)


def affine_from_word(system: RootSystem, word: Sequence[int]) -> AffineElement:
    result = affine_identity(system)
    for i in word:
        result = affine_multiply(result, affine_generator(system, i))
    return result


def apply_point(w: AffineElement, x: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    n = w.system.rank
    return tuple(
        sum((int(w.finite.matrix[i, j]) * Fraction(x[j]) for j in range(n)), Fraction(0)) + w.beta[i] for i in range(n)
    )


def alcove_point(system: RootSystem) -> tuple[Fraction, ...]:
    """x0 with (alpha_i | x0) = 1/h for every simple root."""
    n = system.rank
    h = system.coxeter_number
    # (alpha_i | x) = d_i * sum_j a_ij x_j, solved through the inverse Cartan matrix
    target = [Fraction(1, h) / system.symmetrizer[i] for i in range(n)]
    return tuple(sum((system.inverse_cartan[i][j] * target[j] for j in range(n)), Fraction(0)) for i in range(n))


def _integer_pairing(system: RootSystem, root: RootVec, beta: Sequence[int]) -> int:
    value = inner_product(system, root, beta)
    if value.denominator != 1:
        raise PreconditionViolationError(f"translation {list(beta)} is not in the translation lattice")
    return int(value)


def shi_coefficient(w: AffineElement, root: RootVec) -> int:
    """k(w, alpha) = floor((alpha | w x0)), extended by k(w, -alpha) = -k(w, alpha)."""
    if root.is_negative:
        return -shi_coefficient(w, -root)
    system = w.system
    preimage = act(inverse(w.finite), root)
    return int(height(preimage)) // system.coxeter_number + _integer_pairing(system, root, w.beta)


@dataclass(frozen=True)
class ShiVector:
    system: RootSystem
    coefficients: tuple[int, ...]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {root.coords: k for root, k in zip(self.system.positive_roots, self.coefficients)}

    def is_admissible(self) -> bool:
        values = self.as_dict()
        for a, b in itertools.combinations_with_replacement(self.system.positive_roots, 2):
            total = (a + b).coords
            if total not in values:
                continue
            low = values[a.coords] + values[b.coords]
            if not low <= values[total] <= low + 1:
                return False
        return True


def shi_vector(w: AffineElement) -> ShiVector:
    system = w.system
    inv = inverse(w.finite).matrix
    preimage_heights = (inv @ system.roots_matrix).sum(axis=0)
    h = system.coxeter_number
    coefficients = tuple(
        int(ph) // h + _integer_pairing(system, root, w.beta)
        for root, ph in zip(system.positive_roots, preimage_heights.tolist())
    )
    return ShiVector(system, coefficients)


def affine_length(w: AffineElement) -> int:
    return sum(abs(k) for k in shi_vector(w).coefficients)


def affine_reduced_word(w: AffineElement) -> tuple[int, ...]:
    """Strip left descents, smallest index first."""
    system = w.system
    letters = []
    current = w
    current_length = affine_length(current)
    while current_length > 0:
        for i in range(system.rank + 1):
            candidate = affine_multiply(affine_generator(system, i), current)
            candidate_length = affine_length(candidate)
            if candidate_length < current_length:
                letters.append(i)
                current, current_length = candidate, candidate_length
                break
        else:
            raise PreconditionViolationError("no left descent found for a nontrivial element")
    return tuple(letters)


def with_word(w: AffineElement) -> AffineElement:
    if w.word is not None:
        return w
    return AffineElement(w.system, w.beta, w.finite, affine_reduced_word(w))


@dataclass(frozen=True)
class AffineWeight:
    system: RootSystem
    finite: tuple[Fraction, ...]
    level: int
    delta: Fraction = Fraction(0)

    def pairing(self, i: int) -> Fraction:
        if i == 0:
            return self.level - inner_product(self.system, self.finite, self.system.highest_root)
        return Fraction(pairing(self.system, self.finite, i))

    @property
    def marks(self) -> tuple[Fraction, ...]:
        return tuple(self.pairing(i) for i in range(self.system.rank + 1))

    @property
    def is_dominant(self) -> bool:
        return all(m >= 0 for m in self.marks)


def affine_weight_from_marks(system: RootSystem, marks: Sequence[int]) -> AffineWeight:
    """Weight m_0 Lambda_0 + ... + m_n Lambda_n."""
    require_affine(system)
    if len(marks) != system.rank + 1:
        raise InvalidIndexError(f"type {system.label} expects {system.rank + 1} affine weight coordinates")
    level = sum(m * a for m, a in zip(marks, system.comarks))
    finite = weight(system, marks[1:]).root_coords
    return AffineWeight(system, finite, level)


def simple_weight_action(i: int, mu: AffineWeight) -> AffineWeight:
    system = mu.system
    p = mu.pairing(i)
    if i == 0:
        # alpha_0 = delta - theta
        theta = system.highest_root.coords
        finite = tuple(x + p * t for x, t in zip(mu.finite, theta))
        return AffineWeight(system, finite, mu.level, mu.delta - p)
    finite = tuple(x - (p if k == i - 1 else 0) for k, x in enumerate(mu.finite))
    return AffineWeight(system, finite, mu.level, mu.delta)


def translation_action(w: AffineElement, mu: AffineWeight) -> AffineWeight:
    """Apply w = tau_beta * w-bar through tau_beta(nu) = nu + l beta - ((nu|beta) + |beta|^2 l / 2) delta."""
    system = w.system
    n = system.rank
    moved = tuple(sum((int(w.finite.matrix[i, j]) * mu.finite[j] for j in range(n)), Fraction(0)) for i in range(n))
    beta = w.beta
    shift = inner_product(system, moved, beta) + Fraction(mu.level, 2) * inner_product(system, beta, beta)
    finite = tuple(x + mu.level * b for x, b in zip(moved, beta))
    return AffineWeight(system, finite, mu.level, mu.delta - shift)


def affine_weight_action(w: AffineElement | Sequence[int], mu: AffineWeight) -> AffineWeight:
    if isinstance(w, AffineElement):
        if w.word is None:
            return translation_action(w, mu)
        letters = w.word
    else:
        letters = tuple(w)
    for i in reversed(letters):
        mu = simple_weight_action(i, mu)
    return mu


def _signed_atomic_length(w: AffineElement, lam: AffineWeight) -> Fraction:
    image = affine_weight_action(with_word(w), lam)
    diff = height([a - b for a, b in zip(lam.finite, image.finite)])
    return diff + lam.system.coxeter_number * (lam.delta - image.delta)


def _check_dominant(lam: AffineWeight) -> None:
    if not lam.is_dominant or any(Fraction(m).denominator != 1 for m in lam.marks):
        raise NotDominantError(f"affine weight with marks {[str(m) for m in lam.marks]} is not dominant integral")


def affine_atomic_length(w: AffineElement, lam: AffineWeight) -> int:
    """<lambda - w(lambda), rho^vee> through the simple-reflection action."""
    _check_dominant(lam)
    return int(_signed_atomic_length(w, lam))


def affine_atomic_length_closed(w: AffineElement, lam: AffineWeight) -> int:
    _check_dominant(lam)
    system = w.system
    n = system.rank
    moved = [sum((int(w.finite.matrix[i, j]) * lam.finite[j] for j in range(n)), Fraction(0)) for i in range(n)]
    finite_part = height([a - b for a, b in zip(lam.finite, moved)])
    beta = w.beta
    value = (
        finite_part
        - lam.level * height(beta)
        + system.coxeter_number
        * (inner_product(system, lam.finite, w.gamma) + Fraction(lam.level, 2) * inner_product(system, beta, beta))
    )
    return int(value)


def level_one_atomic_length(system: RootSystem, beta: Sequence[int]) -> int:
    """L_{Lambda_0} of any element whose translation part is beta."""
    value = Fraction(system.coxeter_number, 2) * inner_product(system, beta, beta) - height(beta)
    if value.denominator != 1:
        raise PreconditionViolationError(f"translation {list(beta)} is not in the lattice of {system.label}")
    return int(value)


def affine_decomposition_check(w: AffineElement, lam: AffineWeight) -> bool:
    system = w.system
    n = system.rank
    moved = [sum((int(w.finite.matrix[i, j]) * lam.finite[j] for j in range(n)), Fraction(0)) for i in range(n)]
    finite_part = height([a - b for a, b in zip(lam.finite, moved)])
    rhs = (
        finite_part
        + lam.level * level_one_atomic_length(system, w.beta)
        + system.coxeter_number * inner_product(system, lam.finite, w.gamma)
    )
    return affine_atomic_length(w, lam) == rhs


def _integer_echelon(rows: list[list[int]]) -> list[list[int]]:
    rows = [list(r) for r in rows if any(r)]
    width = len(rows[0]) if rows else 0
    basis = []
    for col in range(width):
        pivots = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(pivots) > 1:
            pivots.sort(key=lambda r: abs(r[col]))
            head = pivots[0]
            remaining = []
            for r in pivots[1:]:
                q = r[col] // head[col]
                reduced = [a - q * b for a, b in zip(r, head)]
                if reduced[col] != 0:
                    remaining.append(reduced)
                elif any(reduced):
                    rest.append(reduced)
            pivots = [head, *remaining]
        if pivots:
            basis.append(pivots[0])
        rows = rest
    return basis


def translation_lattice_basis(system: RootSystem) -> list[list[int]]:
    """Z-basis of the translations, generated by the W-bar orbit of theta (the long roots)."""
    return _integer_echelon([list(r.coords) for r in system.long_roots])


def level_one_image(system: RootSystem, bound: int) -> dict[int, int]:
    """Histogram of (h/2)|beta|^2 - ht(beta) <= bound over the translation lattice."""
    require_affine(system)
    n = system.rank
    h = system.coxeter_number
    basis = np.array(translation_lattice_basis(system), dtype=np.int64)
    scale = math.lcm(*(g.denominator for row in system.gram for g in row))
    gram_int = np.array([[int(g * scale) for g in row] for row in system.gram], dtype=np.int64)

    gram_f = gram_int.astype(np.float64) / scale
    ones = np.ones(n)
    rho_norm = math.sqrt(float(ones @ np.linalg.solve(gram_f, ones)))
    radius = (rho_norm + math.sqrt(rho_norm**2 + 2 * h * bound)) / h
    basis_gram = basis.astype(np.float64) @ gram_f @ basis.T.astype(np.float64)
    spans = np.sqrt(np.diag(np.linalg.inv(basis_gram))) * radius
    ranges = [range(-int(s) - 1, int(s) + 2) for s in spans]

    counts: dict[int, int] = {}
    for chunk in _chunks(itertools.product(*ranges), 1 << 16):
        coeffs = np.array(chunk, dtype=np.int64)
        betas = coeffs @ basis
        quad = np.einsum("ij,jk,ik->i", betas, gram_int, betas)
        numerator = h * quad - 2 * scale * betas.sum(axis=1)
        values = numerator // (2 * scale)
        keep = values <= bound
        for value, count in zip(*np.unique(values[keep], return_counts=True)):
            counts[int(value)] = counts.get(int(value), 0) + int(count)
    return dict(sorted(counts.items()))


def _chunks(iterable, size: int):
    batch = []
    for item in iterable:
        batch.append(item)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def affine_image_probe(
    system: RootSystem,
    lam: AffineWeight,
    radius: int,
    *,
    settings: Settings | None = None,
) -> ImageReport:
    """Values of L_lambda on elements of length <= radius acting on lambda."""
    settings = settings or get_settings()
    require_affine(system)
    _check_dominant(lam)
    if radius > settings.radius_cap:
        raise RadiusTooLargeError(f"radius {radius} exceeds the configured cap {settings.radius_cap}")
    start = [int(m) for m in lam.marks]
    layers = orbit_depth_layers(
        system.affine_cartan, start, cap=settings.orbit_cap, max_layers=radius, threads=settings.threads
    )
    certified = max(layers.depth_counts) if layers.complete else layers.frontier_min_depth
    logger.info(
        "affine image type=%s weight=%s radius=%s orbit_points=%s certified=%s",
        system.label,
        start,
        radius,
        layers.orbit_size,
        certified,
    )
    return ImageReport.from_values(
        type=str(system.label),
        weight=start,
        values=layers.depth_counts.keys(),
        orbit_size=layers.orbit_size,
        element_counts={d: c for d, c in sorted(layers.depth_counts.items()) if d <= certified},
        certified_max=certified,
    )


def finite_word(w: AffineElement) -> tuple[int, ...]:
    return reduced_word(w.finite)
