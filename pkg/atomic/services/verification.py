"""Embedded fixture tables checked by ``atomic verify``."""

from __future__ import annotations

import logging
from collections.abc import Callable

from atomic.config import Settings, get_settings
from atomic.domain.affine import (
    affine_atomic_length,
    affine_atomic_length_closed,
    affine_from_word,
    affine_image_probe,
    affine_weight_from_marks,
    shi_vector,
)
from atomic.domain.atomiclen import (
    atomic_length,
    atomic_length_w0,
    expected_w0_atomic_length,
    image_set,
    is_ideal,
    lambda_inversion_set,
    minuscule_weights,
)
from atomic.domain.cores import core_count_vs_lattice, orbit_cores
from atomic.domain.perms import (
    all_permutations,
    cosine,
    cosine_range_probe,
    entropy,
    invsum,
    invsum_total,
    longest_permutation,
    ninvsum,
    to_weyl,
)
from atomic.domain.rootdata import RootSystem, from_epsilon, root_system, weight
from atomic.domain.susanfe import special_reflection, special_reflection_decomposition, surjectivity_susanfe_induction
from atomic.domain.weyl import (
    evaluate,
    inversion_set,
    inversion_set_from_word,
    reduced_word,
    reflection,
    reflection_subgroup,
    utopic_count,
)
from atomic.schemas.reports import FixtureResult, UtopicCount

logger = logging.getLogger(__name__)

RANK_TWO_IMAGES = {
    "A2": [0, 1, 3, 4],
    "B2": [0, 1, 3, 4, 6, 7],
    "G2": [0, 1, 3, 5, 8, 11, 13, 15, 16],
}

W0_VALUES = {"E6": 156, "E7": 399, "E8": 1240, "F4": 110, "G2": 16}

# weight -> (max value, missing values)
C3_IDEAL_WEIGHTS = {
    (2, 1, 1): (27, []),
    (1, 2, 1): (30, [3, 12, 18, 27]),
    (1, 1, 2): (31, [5, 12, 19, 26]),
}

# word, finite part, translation, w-bar^-1(translation), L_{Lambda_0}
AFFINE_A2_TABLE = [
    ((), (), (0, 0), (0, 0), 0),
    ((0,), (2, 1, 2), (1, 1), (-1, -1), 1),
    ((1, 0), (2, 1), (0, 1), (-1, -1), 2),
    ((2, 0), (1, 2), (1, 0), (-1, -1), 2),
    ((2, 1, 0), (1,), (0, -1), (-1, -1), 4),
    ((1, 2, 0), (2,), (-1, 0), (-1, -1), 4),
    ((2, 1, 2, 0), (), (-1, -1), (-1, -1), 5),
    ((0, 2, 1, 0), (1, 2), (2, 1), (-1, -2), 6),
    ((0, 1, 2, 0), (2, 1), (1, 2), (-2, -1), 6),
    ((0, 2, 1, 2, 0), (1, 2, 1), (2, 2), (-2, -2), 8),
    ((1, 0, 2, 1, 0), (2,), (-1, 1), (-1, -2), 9),
    ((2, 0, 1, 2, 0), (1,), (1, -1), (-2, -1), 9),
]

# (letter, epsilon pair) for the two reduced words of one A4 element
LAMBDA_INVERSIONS_A4 = {
    (1, 2, 1, 3, 4, 3): {(1, (1, 2)), (1, (2, 3)), (2, (1, 3)), (3, (1, 4)), (3, (4, 5)), (4, (1, 5))},
    (2, 1, 4, 2, 3, 4): {(1, (1, 3)), (2, (2, 3)), (2, (1, 2)), (3, (1, 5)), (4, (1, 4)), (4, (4, 5))},
}

# roots, in epsilon coordinates, where the Shi coefficient is -1; every other entry is 0
SHI_NEGATIVES = {
    ("A4", "special"): [
        (1, -1, 0, 0, 0),
        (1, 0, -1, 0, 0),
        (1, 0, 0, -1, 0),
        (1, 0, 0, 0, -1),
        (0, 1, 0, 0, -1),
        (0, 0, 1, 0, -1),
        (0, 0, 0, 1, -1),
    ],
    ("B4", "highest"): [
        (1, 0, 1, 0),
        (1, 0, -1, 0),
        (1, 0, 0, 1),
        (1, 0, 0, -1),
        (0, 1, 1, 0),
        (0, 1, -1, 0),
        (0, 1, 0, 1),
        (0, 1, 0, -1),
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (1, 1, 0, 0),
    ],
    ("B4", "special"): [
        (1, 1, 0, 0),
        (1, -1, 0, 0),
        (1, 0, 1, 0),
        (1, 0, -1, 0),
        (1, 0, 0, 1),
        (1, 0, 0, -1),
        (1, 0, 0, 0),
    ],
    ("C4", "special"): [
        (1, 1, 0, 0),
        (1, -1, 0, 0),
        (1, 0, 1, 0),
        (1, 0, -1, 0),
        (1, 0, 0, 1),
        (1, 0, 0, -1),
        (2, 0, 0, 0),
    ],
}

# type -> indices i with omega_i minuscule
MINUSCULE = {
    "A3": [1, 2, 3],
    "B3": [3],
    "C3": [1],
    "D5": [1, 4, 5],
    "E6": [1, 6],
    "E7": [7],
    "E8": [],
}

RESTRICTED_CONSTANTS = {"A4": 10, "B4": 28, "C4": 28, "D5": 31}

# type -> (reduced word of t_I, reduced word of the coset part)
SPECIAL_DECOMPOSITIONS = {
    "A4": ((4, 3, 2), (1, 2, 3, 4)),
    "C4": ((), (1, 2, 3, 4, 3, 2, 1)),
}

CLASSICAL_W0_TYPES = [
    *(f"A{n}" for n in range(1, 9)),
    *(f"B{n}" for n in range(2, 9)),
    *(f"C{n}" for n in range(3, 9)),
    *(f"D{n}" for n in range(4, 9)),
]


def _epsilon_root(system, pair: tuple[int, int]):
    eps = [0] * (system.rank + 1)
    eps[pair[0] - 1] = 1
    eps[pair[1] - 1] = -1
    return from_epsilon(system, eps).coords


def expected_shi_vector(system: RootSystem, negatives: list[tuple[int, ...]]) -> dict[tuple[int, ...], int]:
    wanted = {from_epsilon(system, eps).coords for eps in negatives}
    return {root.coords: -1 if root.coords in wanted else 0 for root in system.positive_roots}


def _check(name: str, expected, actual) -> FixtureResult:
    return FixtureResult(name=name, expected=str(expected), actual=str(actual), passed=expected == actual)


def _rank_two_images(settings: Settings) -> list[FixtureResult]:
    results = []
    for label, expected in RANK_TWO_IMAGES.items():
        system = root_system(label)
        report = image_set(system, system.rho, settings=settings)
        results.append(_check(f"image {label} rho", expected, report.values))
    return results


def _w0_values(settings: Settings) -> list[FixtureResult]:
    results = []
    for label, expected in W0_VALUES.items():
        system = root_system(label)
        results.append(_check(f"w0 {label}", expected, atomic_length_w0(system, system.rho)))
        results.append(_check(f"w0 {label} closed form", expected, expected_w0_atomic_length(system.label)))
    return results


def _c3_ideal_weights(settings: Settings) -> list[FixtureResult]:
    system = root_system("C3")
    results = []
    for coords, (top, missing) in C3_IDEAL_WEIGHTS.items():
        ideal, report = is_ideal(system, weight(system, coords), settings=settings)
        actual = (report.max_value, report.missing) if report is not None else None
        results.append(_check(f"ideal C3 {list(coords)}", (top, missing), actual))
        results.append(_check(f"ideal flag C3 {list(coords)}", not missing, ideal))
    return results


def _affine_a2_table() -> list[FixtureResult]:
    system = root_system("A2~")
    lam = affine_weight_from_marks(system, [1, 0, 0])
    results = []
    for word, finite_word, beta, gamma, value in AFFINE_A2_TABLE:
        w = affine_from_word(system, word)
        actual = (w.finite == evaluate(system, finite_word), w.beta, w.gamma, affine_atomic_length(w, lam))
        results.append(_check(f"A2~ {''.join(map(str, word)) or 'e'}", (True, beta, gamma, value), actual))
        results.append(_check(f"A2~ {''.join(map(str, word)) or 'e'} closed form", value, affine_atomic_length_closed(w, lam)))
    return results


def _lambda_inversions() -> list[FixtureResult]:
    system = root_system("A4")
    lam = weight(system, [2, 3, 5, 7])
    results = []
    for word, expected in LAMBDA_INVERSIONS_A4.items():
        found = lambda_inversion_set(system, word, lam)
        actual = {(entry.letter, entry.root.coords) for entry in found.entries}
        wanted = {(letter, _epsilon_root(system, pair)) for letter, pair in expected}
        results.append(_check(f"lambda inversions A4 {list(word)}", True, actual == wanted))
    return results


def _reflection_subgroup_a3() -> list[FixtureResult]:
    system = root_system("A3")
    w = evaluate(system, [1, 2, 1, 3])
    inversions = {r.coords for r in inversion_set(w)}
    wanted = {_epsilon_root(system, p) for p in [(1, 2), (1, 3), (2, 3), (1, 4)]}
    group = reflection_subgroup(system, [evaluate(system, [1, 2, 1]), evaluate(system, [3])])
    delta = {r.coords for r in group.delta}
    return [
        _check("inversion set A3 s1s2s1s3", True, inversions == wanted),
        _check("canonical simple system A3", True, delta == {_epsilon_root(system, (1, 3)), _epsilon_root(system, (3, 4))}),
    ]


def _special_shi_vectors() -> list[FixtureResult]:
    results = []
    for (label, which), negatives in SHI_NEGATIVES.items():
        finite = root_system(label)
        if which == "special":
            word = special_reflection(finite).word
        else:
            word = reduced_word(reflection(finite, finite.highest_root))
        vector = shi_vector(affine_from_word(root_system(f"{label}~"), word))
        results.append(_check(f"Shi vector {label} {which}", expected_shi_vector(finite, negatives), vector.as_dict()))
    return results


def _minuscule() -> list[FixtureResult]:
    results = []
    for label, expected in MINUSCULE.items():
        system = root_system(label)
        found = [m.index(1) + 1 for m in (list(lam.fund_coords) for lam in minuscule_weights(system))]
        results.append(_check(f"minuscule {label}", expected, found))
    return results


def _restricted_constants() -> list[FixtureResult]:
    results = []
    for label, expected in RESTRICTED_CONSTANTS.items():
        special = special_reflection(root_system(label))
        results.append(_check(f"restricted constant {label}", expected, special.constant))
    return results


def _special_decompositions() -> list[FixtureResult]:
    return [
        _check(f"special decomposition {label}", expected, special_reflection_decomposition(root_system(label)))
        for label, expected in SPECIAL_DECOMPOSITIONS.items()
    ]


def _classical_w0() -> list[FixtureResult]:
    results = []
    for label in CLASSICAL_W0_TYPES:
        system = root_system(label)
        expected = expected_w0_atomic_length(system.label)
        results.append(_check(f"w0 {label} closed form", expected, atomic_length_w0(system, system.rho)))
    return results


def _inversion_word_a4() -> list[FixtureResult]:
    system = root_system("A4")
    found = {r.coords for r in inversion_set_from_word(system, [1, 2, 1, 3, 4, 3])}
    wanted = {_epsilon_root(system, p) for p in [(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5)]}
    return [_check("inversions of A4 word 121343", True, found == wanted)]


def _affine_a3_interval(settings: Settings) -> list[FixtureResult]:
    system = root_system("A3~")
    lam = affine_weight_from_marks(system, [1, 0, 0, 0])
    report = affine_image_probe(system, lam, 30, settings=settings)
    covered = report.certified_max is not None and report.certified_max >= 30
    interval = [v for v in report.values if v <= 30]
    return [_check("A3~ Lambda_0 image covers 0..30", (True, list(range(31))), (covered, interval))]


def _g2_asymmetry() -> list[FixtureResult]:
    system = root_system("G2")
    pair = (atomic_length(evaluate(system, [1, 2])), atomic_length(evaluate(system, [2, 1])))
    return [_check("G2 atomic length of s1s2 and s2s1", (3, 5), tuple(sorted(pair)))]


def _susanfe_induction(settings: Settings) -> list[FixtureResult]:
    results = []
    for label in ("A4", "B5", "C5"):
        system = root_system(label)
        report = surjectivity_susanfe_induction(system, settings=settings)
        results.append(_check(f"induction {label}", [], report.missing))
    return results


def _cores(settings: Settings) -> list[FixtureResult]:
    sizes = sorted(orbit_cores(2, 5, settings=settings))
    return [
        _check("3-cores up to size 5", [0, 1, 2, 4, 5], sizes),
        _check("3-cores of size 3 against lattice", (0, 0), core_count_vs_lattice(2, 3, settings=settings)),
    ]


def _permutations() -> list[FixtureResult]:
    n = 4
    w0 = longest_permutation(n)
    stats_hold = all(
        entropy(w) == 2 * invsum(w) == 2 * atomic_length(to_weyl(w))
        and cosine(w) == cosine(w0) + ninvsum(w)
        and invsum(w) + ninvsum(w) == invsum_total(n)
        for w in all_permutations(n)
    )
    return [
        _check("S4 invsum of w0", 10, invsum(w0)),
        _check("S4 statistics identities", True, stats_hold),
        _check("cosine 16 unattained", True, 16 in cosine_range_probe(8, 30).missing),
    ]


def _affine_b2_generator() -> list[FixtureResult]:
    system = root_system("B2~")
    lam = affine_weight_from_marks(system, [1, 0, 1])
    w = affine_from_word(system, [0])
    return [_check("B2~ s0 on Lambda_0 + Lambda_2", 1, affine_atomic_length(w, lam))]


def run_fixture_suite(settings: Settings | None = None) -> list[FixtureResult]:
    settings = settings or get_settings()
    groups: list[Callable[[], list[FixtureResult]]] = [
        lambda: _rank_two_images(settings),
        lambda: _w0_values(settings),
        lambda: _c3_ideal_weights(settings),
        _affine_a2_table,
        _lambda_inversions,
        _reflection_subgroup_a3,
        _special_shi_vectors,
        _minuscule,
        _restricted_constants,
        _special_decompositions,
        _classical_w0,
        _inversion_word_a4,
        lambda: _affine_a3_interval(settings),
        _g2_asymmetry,
        lambda: _susanfe_induction(settings),
        lambda: _cores(settings),
        _permutations,
        _affine_b2_generator,
    ]
    results = []
    for group in groups:
        results.extend(group())
    failed = [r.name for r in results if not r.passed]
    logger.info("fixture suite finished total=%s failed=%s", len(results), len(failed))
    for name in failed:
        logger.warning("fixture mismatch name=%s", name)
    return results


def _fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def utopic_census(ranks: range = range(2, 5), *, settings: Settings | None = None) -> list[UtopicCount]:
    """I-utopic counts in B_n for I = {2..n}, reported next to F_n - 1 without asserting either."""
    settings = settings or get_settings()
    rows = []
    for n in ranks:
        system = root_system(f"B{n}")
        indices = list(range(2, n + 1))
        count = utopic_count(system, indices, settings=settings)
        rows.append(UtopicCount(type=f"B{n}", indices=indices, count=count, fibonacci_minus_one=_fibonacci(n) - 1))
        logger.info("utopic census type=B%s count=%s fibonacci_minus_one=%s", n, count, _fibonacci(n) - 1)
    return rows
