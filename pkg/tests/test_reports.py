import json

from atomic.schemas.reports import CoreCountReport, ImageReport, gaps


def test_gaps():
    assert gaps([0, 1, 3, 4], 4) == [2]
    assert gaps([], 2) == [0, 1, 2]
    assert gaps([0, 1, 2], 2) == []


def test_image_report_from_values():
    report = ImageReport.from_values(type="A2", weight=[1, 1], values={4, 0, 3, 1}, orbit_size=6, max_value=4)
    assert report.values == [0, 1, 3, 4]
    assert report.missing == [2]
    assert not report.is_interval


def test_image_report_certified_prefix():
    report = ImageReport.from_values(
        type="A2~", weight=[1, 0, 0], values=[0, 1, 2, 4, 5, 6, 8, 9, 12], orbit_size=9, certified_max=9
    )
    assert report.values == [0, 1, 2, 4, 5, 6, 8, 9]
    assert report.missing == [3, 7]


def test_reports_survive_json():
    report = CoreCountReport(n=2, max_size=5, sizes={0: 1, 1: 1, 2: 2, 4: 2, 5: 1}, missing=[3])
    restored = CoreCountReport.model_validate_json(report.model_dump_json())
    assert restored == report


def test_image_report_json_uses_the_max_key():
    report = ImageReport.from_values(
        type="C3", weight=[1, 2, 1], values=[v for v in range(31) if v not in (3, 12, 18, 27)], orbit_size=48, max_value=30
    )
    payload = json.loads(report.model_dump_json())
    assert payload["max"] == 30
    assert "max_value" not in payload
    assert payload["missing"] == gaps(payload["values"], payload["max"]) == [3, 12, 18, 27]
    assert payload["orbit_size"] == 48
    restored = ImageReport.model_validate_json(report.model_dump_json())
    assert restored == report
    assert ImageReport.model_validate(report.model_dump()).max_value == 30


def test_certified_report_exposes_its_bound_as_max():
    report = ImageReport.from_values(type="A2~", weight=[1, 0, 0], values=[0, 1, 2, 4], orbit_size=7, certified_max=4)
    payload = json.loads(report.model_dump_json())
    assert payload["max"] == 4
    assert payload["missing"] == gaps(payload["values"], payload["max"])
