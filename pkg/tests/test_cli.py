import json

import pytest

from cli import main as cli_main
from cli.formatting import render, shi_pyramid
from cli.run_config import RunConfig, parse_int_list
from atomic.domain.enums import OutputFormat
from atomic.domain.exceptions import InvalidTypeError, PreconditionViolationError
from atomic.schemas.reports import FixtureResult, UtopicCount


@pytest.fixture(autouse=True)
def silence_logger(monkeypatch):
    monkeypatch.setattr(cli_main, "configure_logger", lambda settings=None: None)
    monkeypatch.setenv("ATOMIC_THREADS", "1")


def run(capsys, *argv):
    code = cli_main.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_int_list():
    assert parse_int_list("1,1,2") == [1, 1, 2]
    assert parse_int_list("3 0 1") == [3, 0, 1]
    assert parse_int_list(None) is None
    with pytest.raises(ValueError):
        parse_int_list("1,x")


def test_run_config_validates_type():
    assert str(RunConfig(type_string="C2~").label) == "C2~"
    with pytest.raises(InvalidTypeError):
        RunConfig(type_string="H3")


def test_image_json(capsys):
    code, out, _ = run(capsys, "image", "--type", "A2", "--weight", "1,1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["values"] == [0, 1, 3, 4]
    assert payload["missing"] == [2]
    assert payload["orbit_size"] == 6


def test_image_text_and_csv(capsys):
    code, out, _ = run(capsys, "image", "--type", "B2")
    assert code == 0
    assert "values 0-1, 3-4, 6-7" in out
    assert "not an interval" in out
    code, out, _ = run(capsys, "image", "--type", "A2", "--format", "csv")
    assert out.splitlines() == ["value,count", "0,1", "1,2", "3,2", "4,1"]


def test_w0_prints_value(capsys):
    code, out, _ = run(capsys, "w0", "--type", "E6")
    assert code == 0
    assert out.strip() == "156"


def test_cores_json(capsys):
    code, out, _ = run(capsys, "cores", "--n", "2", "--max", "5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert sorted(payload["sizes"], key=int) == ["0", "1", "2", "4", "5"]
    assert payload["missing"] == [3]
    assert payload["cores"]["5"] == [[3, 1, 1]]


def test_cores_count_only(capsys):
    code, out, _ = run(capsys, "cores", "--n", "2", "--max", "5", "--count-only", "--json")
    assert json.loads(out)["cores"] is None


def test_entropy_csv(capsys):
    code, out, _ = run(capsys, "entropy", "--n", "3")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "one_line,length,invsum,ninvsum,entropy,cosine"
    assert len(lines) == 7
    assert "321,3,4,0,8,10" in lines


def test_entropy_stats(capsys):
    code, out, _ = run(capsys, "entropy", "--n", "4", "--stats", "--json")
    payload = json.loads(out)
    assert payload["permutations"] == 24
    assert payload["invsum_total"] == 10
    assert payload["average_cosine"] == "25"
    assert payload["identities_hold"] is True


def test_shi_json(capsys):
    code, out, _ = run(capsys, "shi", "--type", "A2~", "--word", "0", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["length"] == 1
    assert payload["admissible"] is True
    assert [e["coefficient"] for e in payload["entries"]] == [0, 0, 1]


def test_affine_json(capsys):
    code, out, _ = run(capsys, "affine", "--type", "A2~", "--word", "0,2,1,0", "--json")
    payload = json.loads(out)
    assert payload["translation"] == [2, 1]
    assert payload["atomic_length"] == 6


def test_affine_radius_reports_the_orbit_image(capsys):
    code, out, _ = run(capsys, "affine", "--type", "A2~", "--weight", "1,0,0", "--radius", "12", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["certified_max"] >= 12
    assert payload["max"] == payload["certified_max"]
    assert payload["values"][:8] == [0, 1, 2, 4, 5, 6, 8, 9]
    assert 3 in payload["missing"]
    assert 7 in payload["missing"]
    assert payload["missing"] == [v for v in range(payload["max"] + 1) if v not in payload["values"]]
    code, out, _ = run(capsys, "affine", "--type", "A2~", "--radius", "6", "--format", "csv")
    assert out.splitlines()[:3] == ["value,count", "0,1", "1,1"]


def test_lattice_failure_exits_with_failure_code(monkeypatch, capsys):
    def outside_lattice(system, word):
        raise PreconditionViolationError("translation [1/2, 0] is not in the translation lattice")

    monkeypatch.setattr(cli_main, "affine_from_word", outside_lattice)
    code, _, err = run(capsys, "affine", "--type", "A2~", "--word", "0")
    assert code == 1
    assert "translation lattice" in err


def test_susanfe_report(capsys):
    code, out, _ = run(capsys, "susanfe", "--type", "A3", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["constant"] == payload["expected_constant"] == 6


def test_unsupported_type_exits_with_usage(capsys):
    code, _, err = run(capsys, "image", "--type", "H3")
    assert code == 2
    assert err.startswith("error:")


def test_missing_type_exits_with_usage(capsys):
    code, _, err = run(capsys, "image")
    assert code == 2
    assert "--type" in err


def test_finite_command_rejects_affine_type(capsys):
    code, _, _ = run(capsys, "w0", "--type", "A2~")
    assert code == 2


def test_bad_number_list_exits_with_usage(capsys):
    code, _, _ = run(capsys, "image", "--type", "A2", "--weight", "1,a")
    assert code == 2


def test_orbit_cap_exits_with_cap_code(monkeypatch, capsys):
    monkeypatch.setenv("ATOMIC_ORBIT_CAP", "5")
    code, _, err = run(capsys, "image", "--type", "A3")
    assert code == 3
    assert "cap" in err


def test_unknown_command_is_rejected():
    with pytest.raises(SystemExit) as excinfo:
        cli_main.parse_args(["bogus"])
    assert excinfo.value.code == 2


def test_shi_pyramid_puts_highest_root_on_top():
    config = RunConfig(type_string="A2~", word=[0])
    report = cli_main.run_shi(config)
    rows = shi_pyramid(report).splitlines()
    assert rows[0].strip() == "1"
    assert rows[1].split() == ["0", "0"]
    assert render(report, OutputFormat.TEXT).startswith("type A2~ word [0] length 1")


def test_verify_text_lists_fixtures_and_census(monkeypatch, capsys):
    results = [
        FixtureResult(name="w0 G2", expected="16", actual="16", passed=True),
        FixtureResult(name="w0 F4", expected="110", actual="111", passed=False),
    ]
    census = [UtopicCount(type="B3", indices=[2, 3], count=13, fibonacci_minus_one=1)]
    monkeypatch.setattr(cli_main, "run_fixture_suite", lambda settings: results)
    monkeypatch.setattr(cli_main, "utopic_census", lambda settings: census)
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert out.splitlines() == [
        "ok   w0 G2",
        "FAIL w0 F4",
        "1/2 fixtures passed",
        "census B3 utopic=13 fibonacci-1=1",
    ]
