from fractions import Fraction

import numpy as np
import pytest

from atomic.domain.enums import Family
from atomic.domain.exceptions import DimensionMismatchError, IndexOutOfRangeError, InvalidTypeError
from atomic.domain.rootdata import (
    TypeLabel,
    classify_cartan,
    from_epsilon,
    fundamental_weight,
    height,
    inner_product,
    parabolic_order,
    parse_type,
    root_system,
    sub_cartan,
    weight,
    weyl_group_order,
)


def test_parse_type_accepts_finite_and_affine_spellings():
    assert parse_type("A5") == TypeLabel(Family.A, 5)
    assert parse_type("b4") == TypeLabel(Family.B, 4)
    assert parse_type("A2~") == TypeLabel(Family.A, 2, affine=True)
    assert parse_type("A2^(1)") == TypeLabel(Family.A, 2, affine=True)
    assert str(parse_type("c3~")) == "C3~"


def test_parse_type_rejects_unknown_types():
    for text in ["H3", "D3", "A0", "E9", "F5", "G3", "", "A-1"]:
        with pytest.raises(InvalidTypeError):
            parse_type(text)


def test_positive_root_counts():
    expected = {"A4": 10, "B3": 9, "C3": 9, "D4": 12, "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}
    for label, count in expected.items():
        assert len(root_system(label).positive_roots) == count


def test_coxeter_numbers_and_highest_root():
    expected = {"A3": (4, 4), "B3": (6, 5), "C3": (6, 4), "D5": (8, 8), "E6": (12, 12), "F4": (12, 9), "G2": (6, 4)}
    for label, (h, h_dual) in expected.items():
        system = root_system(label)
        assert system.coxeter_number == h
        assert system.dual_coxeter_number == h_dual
        assert height(system.highest_root) == h - 1
        assert inner_product(system, system.highest_root, system.highest_root) == 2


def test_marks_and_comarks_of_b3():
    system = root_system("B3")
    assert system.highest_root.coords == (1, 2, 2)
    assert system.marks == (1, 1, 2, 2)
    assert system.comarks == (1, 1, 2, 1)


def test_weyl_group_orders():
    expected = {"A3": 24, "B3": 48, "D4": 192, "E6": 51840, "F4": 1152, "G2": 12}
    for label, order in expected.items():
        assert weyl_group_order(parse_type(label)) == order


def test_classify_sub_diagrams():
    b3 = root_system("B3")
    assert classify_cartan(sub_cartan(b3, [2, 3])) == (TypeLabel(Family.B, 2),)
    d4 = root_system("D4")
    assert classify_cartan(sub_cartan(d4, [1, 3, 4])) == (TypeLabel(Family.A, 1),) * 3
    assert parabolic_order(d4, [1, 3, 4]) == 8
    assert parabolic_order(d4, []) == 1


def test_classify_full_cartan_round_trips():
    for label in ["A4", "B4", "C4", "D5", "E7", "F4", "G2"]:
        system = root_system(label)
        assert classify_cartan(system.cartan) == (system.label,)


def test_rho_and_fundamental_weights():
    a2 = root_system("A2")
    assert a2.rho.root_coords == (1, 1)
    assert weight(a2, [1, 1]).root_coords == (1, 1)
    assert fundamental_weight(a2, 1).root_coords == (Fraction(2, 3), Fraction(1, 3))
    with pytest.raises(IndexOutOfRangeError):
        fundamental_weight(a2, 3)


def test_from_epsilon_coordinates():
    assert from_epsilon(root_system("A3"), [1, 0, 0, -1]).coords == (1, 1, 1)
    assert from_epsilon(root_system("B3"), [1, 0, 0]).coords == (1, 1, 1)
    assert from_epsilon(root_system("C3"), [2, 0, 0]).coords == (2, 2, 1)
    assert from_epsilon(root_system("D4"), [1, 1, 0, 0]).coords == (1, 2, 1, 1)
    with pytest.raises(DimensionMismatchError):
        from_epsilon(root_system("D4"), [1, 0, 0, 0])
    with pytest.raises(DimensionMismatchError):
        from_epsilon(root_system("A2"), [1, 0])


def test_affine_cartan_of_a2():
    system = root_system("A2~")
    assert np.array_equal(system.affine_cartan, np.array([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]))


def test_affine_cartan_of_c2_uses_node_zero_first():
    system = root_system("C2~")
    assert system.affine_cartan[0, 0] == 2
    assert sorted(system.affine_cartan[0, 1:].tolist()) == [-1, 0]
    assert system.marks == (1, 2, 1)
