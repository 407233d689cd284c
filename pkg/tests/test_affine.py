import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from atomic.config import Settings
from atomic.domain.affine import (
    AffineWeight,
    _integer_pairing,
    _signed_atomic_length,
    affine_atomic_length,
    affine_atomic_length_closed,
    affine_decomposition_check,
    affine_from_word,
    affine_generator,
    affine_identity,
    affine_image_probe,
    affine_inverse,
    affine_length,
    affine_multiply,
    affine_reduced_word,
    affine_weight_from_marks,
    alcove_point,
    apply_point,
    level_one_atomic_length,
    level_one_image,
    shi_coefficient,
    shi_vector,
    simple_weight_action,
    translation_lattice_basis,
)
from atomic.domain.exceptions import (
    InvalidIndexError,
    NotDominantError,
    PreconditionViolationError,
    RadiusTooLargeError,
    UnsupportedTypeError,
)
from atomic.domain.rootdata import from_epsilon, root_system, weight
from atomic.domain.weyl import act, evaluate, reduced_word, reflection

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


def random_words(system, count: int, max_length: int, seed: int = 0):
    rng = random.Random(seed)
    for _ in range(count):
        yield [rng.randint(0, system.rank) for _ in range(rng.randint(0, max_length))]


def test_a2_table_rows():
    system = root_system("A2~")
    lam = affine_weight_from_marks(system, [1, 0, 0])
    for word, finite_word, beta, gamma, value in AFFINE_A2_TABLE:
        w = affine_from_word(system, word)
        assert w.finite == evaluate(system, finite_word)
        assert w.beta == beta
        assert w.gamma == gamma
        assert affine_atomic_length(w, lam) == value
        assert affine_atomic_length_closed(w, lam) == value
        assert level_one_atomic_length(system, w.beta) == value
        assert affine_length(w) == len(word)


def test_direct_and_closed_forms_agree_on_short_words():
    system = root_system("A2~")
    weights = [affine_weight_from_marks(system, marks) for marks in ([1, 0, 0], [0, 1, 0], [2, 1, 0], [1, 1, 3])]
    for k in range(5):
        for word in itertools.product(range(3), repeat=k):
            w = affine_from_word(system, word)
            for lam in weights:
                assert affine_atomic_length(w, lam) == affine_atomic_length_closed(w, lam)
                assert affine_decomposition_check(w, lam)


def test_direct_and_closed_forms_agree_in_non_simply_laced_types():
    for label in ["B2~", "C2~", "G2~"]:
        system = root_system(label)
        lam = affine_weight_from_marks(system, [1] * (system.rank + 1))
        for word in random_words(system, 40, 8):
            w = affine_from_word(system, word)
            assert affine_atomic_length(w, lam) == affine_atomic_length_closed(w, lam)


def test_s0_moves_lambda0_by_alpha0():
    system = root_system("A2~")
    lam = affine_weight_from_marks(system, [1, 0, 0])
    image = simple_weight_action(0, lam)
    assert image.finite == system.highest_root.coords
    assert image.delta == -1
    assert image.level == 1


def test_level_zero_weight_is_rejected_but_signed_value_is_computed():
    system = root_system("B2~")
    lam = AffineWeight(system, weight(system, [0, 1]).root_coords, 0)
    s0 = affine_generator(system, 0)
    assert _signed_atomic_length(s0, lam) == -1
    with pytest.raises(NotDominantError):
        affine_atomic_length(s0, lam)


def test_composition_and_inverse():
    system = root_system("C2~")
    for word in random_words(system, 30, 7, seed=1):
        w = affine_from_word(system, word)
        assert affine_multiply(w, affine_inverse(w)).is_identity
        assert affine_inverse(affine_inverse(w)) == w


def test_apply_point_moves_the_alcove():
    system = root_system("A2~")
    s0 = affine_generator(system, 0)
    point = alcove_point(system)
    assert point == (Fraction(1, 3), Fraction(1, 3))
    assert apply_point(s0, point) == (Fraction(2, 3), Fraction(2, 3))


def test_shi_vector_of_s0_and_finite_elements():
    system = root_system("A2~")
    s0 = affine_generator(system, 0)
    assert shi_vector(s0).as_dict() == {(1, 0): 0, (0, 1): 0, (1, 1): 1}
    t = affine_from_word(system, [1, 2, 1])
    assert shi_vector(t).as_dict() == {(1, 0): -1, (0, 1): -1, (1, 1): -1}
    assert shi_coefficient(t, -system.highest_root) == 1


def test_special_reflection_shi_vector_in_a4():
    system = root_system("A4~")
    t = affine_from_word(system, [1, 2, 3, 4, 3, 2, 1])
    negatives = {root for root, k in shi_vector(t).as_dict().items() if k == -1}
    assert negatives == {
        (1, 0, 0, 0),
        (1, 1, 0, 0),
        (1, 1, 1, 0),
        (1, 1, 1, 1),
        (0, 1, 1, 1),
        (0, 0, 1, 1),
        (0, 0, 0, 1),
    }
    assert set(shi_vector(t).as_dict().values()) == {-1, 0}


def negatives_only(system, negatives):
    wanted = {from_epsilon(system, eps).coords for eps in negatives}
    return {root.coords: -1 if root.coords in wanted else 0 for root in system.positive_roots}


def test_shi_vectors_of_b4_and_c4_reflections_entry_by_entry():
    b4 = root_system("B4")
    highest = affine_from_word(root_system("B4~"), reduced_word(reflection(b4, b4.highest_root)))
    assert shi_vector(highest).as_dict() == negatives_only(
        b4,
        [
            (1, 0, 1, 0), (1, 0, -1, 0), (1, 0, 0, 1), (1, 0, 0, -1),
            (0, 1, 1, 0), (0, 1, -1, 0), (0, 1, 0, 1), (0, 1, 0, -1),
            (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0),
        ],
    )
    t_prime = affine_from_word(root_system("B4~"), [1, 2, 3, 4, 3, 2, 1])
    assert shi_vector(t_prime).as_dict() == negatives_only(
        b4, [(1, 1, 0, 0), (1, -1, 0, 0), (1, 0, 1, 0), (1, 0, -1, 0), (1, 0, 0, 1), (1, 0, 0, -1), (1, 0, 0, 0)]
    )
    c4 = root_system("C4")
    t = affine_from_word(root_system("C4~"), [1, 2, 3, 4, 3, 2, 1])
    assert shi_vector(t).as_dict() == negatives_only(
        c4, [(1, 1, 0, 0), (1, -1, 0, 0), (1, 0, 1, 0), (1, 0, -1, 0), (1, 0, 0, 1), (1, 0, 0, -1), (2, 0, 0, 0)]
    )
    assert sum(1 for k in shi_vector(highest).coefficients if k == -1) == 11


def test_shi_admissibility_and_recursion():
    for label in ["A2~", "B2~", "C2~"]:
        system = root_system(label)
        for word in random_words(system, 200, 12, seed=2):
            w = affine_from_word(system, word)
            assert shi_vector(w).is_admissible()
            for i in range(system.rank + 1):
                t = affine_generator(system, i)
                tw = affine_multiply(t, w)
                for root in system.positive_roots:
                    moved = act(t.finite, root)
                    assert shi_coefficient(tw, root) == shi_coefficient(w, moved) + shi_coefficient(t, root)


def test_reduced_word_recovers_the_element():
    for label in ["A2~", "B2~", "G2~"]:
        system = root_system(label)
        for word in random_words(system, 30, 10, seed=3):
            w = affine_from_word(system, word)
            reduced = affine_reduced_word(w)
            assert len(reduced) == affine_length(w)
            assert affine_from_word(system, reduced) == w


def test_generators_and_identity_need_an_affine_type():
    with pytest.raises(UnsupportedTypeError):
        affine_identity(root_system("A2"))
    with pytest.raises(InvalidIndexError):
        affine_generator(root_system("A2~"), 3)
    with pytest.raises(InvalidIndexError):
        affine_weight_from_marks(root_system("A2~"), [1, 0])


def test_translation_lattice_of_c2():
    basis = translation_lattice_basis(root_system("C2~"))
    assert len(basis) == 2
    assert abs(round(np.linalg.det(np.array(basis, dtype=float)))) == 2
    assert translation_lattice_basis(root_system("A2~")) == [[1, 0], [0, 1]]


def test_level_one_image_of_a2():
    values = level_one_image(root_system("A2~"), 9)
    assert values[0] == 1
    assert 3 not in values
    assert sorted(values) == [0, 1, 2, 4, 5, 6, 8, 9]


def test_affine_image_agrees_with_the_lattice_count():
    system = root_system("A2~")
    lam = affine_weight_from_marks(system, [1, 0, 0])
    report = affine_image_probe(system, lam, 8, settings=Settings(threads=1))
    assert report.certified_max is not None
    lattice = level_one_image(system, report.certified_max)
    assert report.values == sorted(lattice)
    assert report.element_counts == lattice


def test_affine_image_radius_cap():
    system = root_system("A2~")
    lam = affine_weight_from_marks(system, [1, 0, 0])
    with pytest.raises(RadiusTooLargeError):
        affine_image_probe(system, lam, 50, settings=Settings(radius_cap=10))


def test_translations_outside_the_lattice_are_rejected():
    system = root_system("A2~")
    half = (Fraction(1, 2), 0)
    with pytest.raises(PreconditionViolationError):
        level_one_atomic_length(system, half)
    with pytest.raises(PreconditionViolationError):
        _integer_pairing(system, system.highest_root, half)
    assert level_one_atomic_length(system, (1, 1)) == 1
    assert level_one_atomic_length(system, (-1, -1)) == 5


def elements_up_to(system, max_length: int):
    """Every element of length <= max_length, layer by layer from the identity."""
    generators = [affine_generator(system, i) for i in range(system.rank + 1)]
    layer = [affine_identity(system)]
    seen = set(layer)
    found = list(layer)
    for _ in range(max_length):
        nxt = []
        for w in layer:
            for s in generators:
                ws = affine_multiply(w, s)
                if ws not in seen:
                    seen.add(ws)
                    nxt.append(ws)
        found.extend(nxt)
        layer = nxt
    return found


def test_direct_and_closed_forms_agree_on_every_short_element():
    for label, max_length in [("A2~", 10), ("A3~", 8), ("C2~", 8)]:
        system = root_system(label)
        rank = system.rank
        marks = [[1] + [0] * rank, [0, 1] + [0] * (rank - 1), [2] + [1] * rank]
        weights = [affine_weight_from_marks(system, m) for m in marks]
        elements = elements_up_to(system, max_length)
        assert max(affine_length(w) for w in elements) == max_length
        for w in elements:
            for lam in weights:
                assert affine_atomic_length(w, lam) == affine_atomic_length_closed(w, lam)
    assert len(elements_up_to(root_system("A2~"), 2)) == 1 + 3 + 6


def test_shi_recursion_for_random_reflections():
    for label in ["A2~", "B2~", "C2~"]:
        system = root_system(label)
        rng = random.Random(label)
        generators = [affine_generator(system, i) for i in range(system.rank + 1)]
        for _ in range(10_000):
            w = affine_from_word(system, [rng.randint(0, system.rank) for _ in range(rng.randint(0, 10))])
            u = affine_from_word(system, [rng.randint(0, system.rank) for _ in range(rng.randint(0, 5))])
            t = affine_multiply(affine_multiply(u, rng.choice(generators)), affine_inverse(u))
            tw = affine_multiply(t, w)
            assert shi_vector(tw).is_admissible()
            for root in system.positive_roots:
                moved = act(t.finite, root)
                assert shi_coefficient(tw, root) == shi_coefficient(w, moved) + shi_coefficient(t, root)
