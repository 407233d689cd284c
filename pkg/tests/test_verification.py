from atomic.config import Settings
from atomic.services import verification


def test_fixture_suite_passes():
    results = verification.run_fixture_suite(Settings(threads=1))
    failed = [r.name for r in results if not r.passed]
    assert failed == []
    assert len(results) > 30


def test_fixture_mismatch_is_reported(monkeypatch):
    monkeypatch.setattr(verification, "W0_VALUES", {"G2": 17})
    results = verification._w0_values(Settings(threads=1))
    assert [r.passed for r in results] == [False, False]
    assert results[0].expected == "17"
    assert results[0].actual == "16"


def test_special_shi_vectors_match_entry_by_entry():
    results = verification._special_shi_vectors()
    assert [r.name for r in results] == [
        "Shi vector A4 special",
        "Shi vector B4 highest",
        "Shi vector B4 special",
        "Shi vector C4 special",
    ]
    assert all(r.passed for r in results)


def test_shi_fixture_detects_a_wrong_entry(monkeypatch):
    tables = dict(verification.SHI_NEGATIVES)
    tables[("C4", "special")] = tables[("C4", "special")][:-1] + [(1, 1, 0, 0)]
    monkeypatch.setattr(verification, "SHI_NEGATIVES", tables)
    results = verification._special_shi_vectors()
    assert [r.passed for r in results] == [True, True, True, False]


def test_structural_fixture_groups_pass():
    groups = [
        verification._minuscule,
        verification._restricted_constants,
        verification._special_decompositions,
        verification._classical_w0,
        verification._inversion_word_a4,
    ]
    for group in groups:
        results = group()
        assert results
        assert [r.name for r in results if not r.passed] == []


def test_affine_a3_interval_fixture():
    (result,) = verification._affine_a3_interval(Settings(threads=1))
    assert result.passed


def test_utopic_census_is_reported_not_asserted():
    rows = verification.utopic_census(range(2, 4), settings=Settings(threads=1))
    assert [row.type for row in rows] == ["B2", "B3"]
    assert [row.fibonacci_minus_one for row in rows] == [0, 1]
    # every reflection and every element of W_I is utopic
    assert rows[0].count >= 4 + 2 - 1
    assert rows[1].count >= 9 + 8 - 4
