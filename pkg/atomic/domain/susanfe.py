"""Susanfe reflections: reflections t whose atomic length splits over a reflection
subgroup, the special reflection of each classical type, and the surjectivity
induction built on it."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from atomic.config import Settings
from atomic.domain.atomiclen import atomic_length, atomic_length_w0, image_set
from atomic.domain.enums import Family
from atomic.domain.exceptions import PreconditionViolationError, UnsupportedTypeError
from atomic.domain.rootdata import (
    RootSystem,
    RootVec,
    TypeLabel,
    build_root_system,
    classify_cartan,
    height,
    sub_cartan,
)
from atomic.domain.weyl import (
    ReflectionSubgroup,
    WeylElement,
    a_decomposition,
    evaluate,
    inversion_set,
    is_reflection,
    length,
    multiply,
    parabolic_subgroup,
    reduced_word,
    reflection,
    reflection_subgroup,
    subgroup_elements,
)
from atomic.schemas.reports import ImageReport


@dataclass(frozen=True)
class SusanfeReport:
    element: WeylElement
    fixed_roots: tuple[RootVec, ...]
    inversion_set: tuple[RootVec, ...]
    is_susanfe: bool


def susanfe_check(w: WeylElement) -> SusanfeReport:
    system = w.system
    images = w.matrix @ system.roots_matrix
    fixed_mask = np.all(images == system.roots_matrix, axis=0)
    fixed = tuple(root for root, hit in zip(system.positive_roots, fixed_mask) if hit)
    inversions = tuple(inversion_set(w))
    complement = {r.coords for r in system.positive_roots} - {r.coords for r in fixed}
    return SusanfeReport(w, fixed, inversions, {r.coords for r in inversions} == complement)


def restricted_atomic_length(w: WeylElement, group: ReflectionSubgroup) -> int:
    """Sum of heights over N(w) outside Phi_A."""
    return sum(int(height(root)) for root in inversion_set(w) if not group.contains_root(root))


@dataclass(frozen=True)
class SpecialReflection:
    element: WeylElement
    word: tuple[int, ...]
    indices: tuple[int, ...]
    constant: int


def _special_word(label: TypeLabel) -> list[int]:
    n = label.rank
    match label.family:
        case Family.A | Family.B | Family.C:
            return [*range(1, n), n, *range(n - 1, 0, -1)]
        case Family.D:
            head = [*range(2, n - 1), n, n - 1, *range(n - 2, 1, -1)]
            tail = [*range(2, n - 1), n - 1, n, *range(n - 2, 1, -1)]
            return [*head, 1, *tail]
    raise UnsupportedTypeError(f"no special reflection for type {label}")


def expected_restricted_constant(label: TypeLabel) -> int:
    n = label.rank
    match label.family:
        case Family.A:
            return comb(n + 1, 2)
        case Family.B | Family.C:
            return 2 * n * n - n
        case Family.D:
            return 2 * n * n - 4 * n + 1
    raise UnsupportedTypeError(f"no restricted constant for type {label}")


def special_reflection(system: RootSystem) -> SpecialReflection:
    """Highest-root reflection (types A, C, D) or t' = s_{e_1} (type B) with I = {2..n}."""
    word = _special_word(system.label)
    element = evaluate(system, word)
    if length(element) != len(word) or is_reflection(element) is None:
        raise PreconditionViolationError(f"special word {word} in {system.label} is not a reduced reflection")
    indices = tuple(range(2, system.rank + 1))
    constant = restricted_atomic_length(element, parabolic_subgroup(system, indices))
    return SpecialReflection(element, tuple(word), indices, constant)


def susanfe_reflections(system: RootSystem) -> list[tuple[RootVec, int]]:
    """Every Susanfe reflection with its restricted length against I = {2..n}."""
    group = parabolic_subgroup(system, range(2, system.rank + 1))
    result = []
    for root in system.positive_roots:
        t = reflection(system, root)
        if susanfe_check(t).is_susanfe:
            result.append((root, restricted_atomic_length(t, group)))
    return result


def conjugate_subgroup(t: WeylElement, group: ReflectionSubgroup) -> ReflectionSubgroup:
    return reflection_subgroup(t.system, [multiply(multiply(t, s), t) for s in group.simple_reflections])


@dataclass(frozen=True)
class DecompositionCheck:
    set_identity: bool
    length_identity: bool

    @property
    def holds(self) -> bool:
        return self.set_identity and self.length_identity


def susanfe_decomposition_check(t: WeylElement, w: WeylElement, group_b: ReflectionSubgroup) -> DecompositionCheck:
    """N(tw) = N_A((tw)_A) + (N(t) outside Phi_A) and the matching length identity, A = tBt."""
    if is_reflection(t) is None or not susanfe_check(t).is_susanfe:
        raise PreconditionViolationError("t is not a Susanfe reflection")
    if not group_b.contains(w):
        raise PreconditionViolationError("w is not in the reflection subgroup W_B")
    group_a = conjugate_subgroup(t, group_b)
    tw = multiply(t, w)
    tw_a, _ = a_decomposition(tw, group_a)
    inner = {r.coords for r in inversion_set(tw_a) if group_a.contains_root(r)}
    outer = {r.coords for r in inversion_set(t) if not group_a.contains_root(r)}
    total = {r.coords for r in inversion_set(tw)}
    set_identity = not (inner & outer) and inner | outer == total
    length_identity = atomic_length(tw) == sum(sum(c) for c in inner) + restricted_atomic_length(t, group_a)
    return DecompositionCheck(set_identity, length_identity)


def coset_image(system: RootSystem, *, cap: int | None = None, settings: Settings | None = None) -> set[int]:
    """{L(x t) : x in W_I} for the special reflection t, by enumeration."""
    special = special_reflection(system)
    group = parabolic_subgroup(system, special.indices)
    return {atomic_length(multiply(x, special.element)) for x in subgroup_elements(group, cap, settings=settings)}


def surjectivity_susanfe_induction(system: RootSystem, *, settings: Settings | None = None) -> ImageReport:
    """Rebuild L(W) as L(W_I) united with L(W_I) + K, plus L(w0) in type D."""
    special = special_reflection(system)
    (sub_label,) = classify_cartan(sub_cartan(system, special.indices))
    sub_system = build_root_system(sub_label)
    sub_report = image_set(sub_system, sub_system.rho, settings=settings)
    values = set(sub_report.values) | {v + special.constant for v in sub_report.values}
    if system.label.family is Family.D:
        values.add(atomic_length_w0(system, system.rho))
    return ImageReport.from_values(
        type=str(system.label),
        weight=[1] * system.rank,
        values=values,
        orbit_size=sub_report.orbit_size,
        max_value=atomic_length_w0(system, system.rho),
    )


def special_reflection_decomposition(system: RootSystem) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reduced words of t_I and of the coset part ^I t."""
    special = special_reflection(system)
    t_i, rest = a_decomposition(special.element, parabolic_subgroup(system, special.indices))
    return reduced_word(t_i), reduced_word(rest)
