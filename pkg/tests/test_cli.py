import json
import subprocess
import sys
from pathlib import Path

import pytest

from eqhom.checks import REGISTRY, catalog
from eqhom.cli import main
from eqhom.scenario import Resolver, Scenario, ScenarioError, check_entry

ROOT = Path(__file__).resolve().parents[1]
SCENARIOS = ROOT / "scenarios"


def write(tmp_path, data, name="s.json"):
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
    return str(p)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_green_scenario_passes(capsys):
    code, report = run(["verify", str(SCENARIOS / "green.json")], capsys)
    assert code == 0
    assert report["summary"] == {"pass": 1, "fail": 0, "error": 0}
    assert report["checks"][0]["id"] == "iso:green"


def test_failed_expectation_carries_a_witness(capsys):
    code, report = run(["verify", str(SCENARIOS / "bar_probe_expect_zero.json")], capsys)
    assert code == 1
    row = report["checks"][0]
    assert row["status"] == "fail"
    assert row["details"]["witness"] == {"degree": 0, "value": {"rank": 1, "torsion": []}}


def test_malformed_json_exits_2_without_report(capsys):
    code = main(["verify", str(SCENARIOS / "malformed.json")])
    captured = capsys.readouterr()
    assert code == 2 and captured.out == ""


@pytest.mark.parametrize("data", [
    {"schema_version": 2, "checks": []},
    {"schema_version": 1, "max_degree": 9, "checks": []},
    {"schema_version": 1, "checks": [{"args": {}}]},
    {"schema_version": 1, "checks": [{"id": "iso"}]},
    {"schema_version": 1, "surprise": True},
    [1, 2],
])
def test_schema_errors_exit_2(tmp_path, capsys, data):
    assert main(["verify", write(tmp_path, data)]) == 2
    assert capsys.readouterr().out == ""


def test_unknown_ids_and_references_are_errors(tmp_path, capsys):
    data = {"schema_version": 1, "checks": [
        {"id": "no-such-check"},
        {"id": "ring-axioms", "ring": "$missing"},
        {"id": "bar-probe", "ring": "Z", "degree": 5},
        {"id": "ring-axioms", "ring": "Z"},
    ]}
    code, report = run(["verify", write(tmp_path, data), "--max-degree", "3"], capsys)
    assert code == 1
    assert [r["status"] for r in report["checks"]] == ["error", "error", "error", "pass"]
    assert "exceeds the cap" in report["checks"][2]["details"]["error"]


def test_circular_references_are_reported():
    r = Resolver({"a": "$b", "b": "$a"})
    with pytest.raises(LookupError):
        r.ring("$a")


def test_flag_overrides_and_report_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["verify", str(SCENARIOS / "green.json"), "--report", str(out), "--seed", "5", "--max-degree", "2"])
    assert code == 0 and capsys.readouterr().out == ""
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["environment"]["seed"] == 5 and report["environment"]["max_degree"] == 2


def test_byte_identical_reports(tmp_path):
    a, b, c = tmp_path / "a.json", tmp_path / "b.json", tmp_path / "c.json"
    scen = str(SCENARIOS / "catalog.json")
    assert main(["verify", scen, "--report", str(a)]) == 0
    assert main(["verify", scen, "--report", str(b)]) == 0
    assert main(["verify", scen, "--report", str(c), "--jobs", "3"]) == 0
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()


def test_seed_changes_random_checks(tmp_path, capsys):
    data = {"schema_version": 1, "checks": [{"id": "extend-roundtrip", "instances": 5}]}
    path = write(tmp_path, data)
    assert main(["verify", path, "--seed", "1"]) == 0
    assert main(["verify", path, "--seed", "2"]) == 0


def test_catalog_is_complete_and_sorted():
    ids = [i for i, _, _ in catalog()]
    assert ids == sorted(ids) == sorted(REGISTRY)
    assert {"reilu", "extend-roundtrip", "iso:green"} <= set(ids)
    assert all(anchor for _, anchor, _ in catalog())


def test_list_checks_output_is_stable(capsys):
    main(["list-checks"])
    first = capsys.readouterr().out
    main(["list-checks"])
    assert capsys.readouterr().out == first
    assert first.startswith("bar-probe")
    main(["list-checks", "--json"])
    rows = json.loads(capsys.readouterr().out)
    assert {"id", "anchor", "args"} <= set(rows[0])


def test_iso_entry_forms():
    assert check_entry({"id": "iso", "name": "green", "group": "$G"}) == ("iso:green", {"group": "$G"}, None)
    assert check_entry({"check": "bar-probe", "args": {"ring": "Z"}, "expect": "pass"}) == \
        ("bar-probe", {"ring": "Z"}, "pass")
    with pytest.raises(ScenarioError):
        Scenario.from_json({"schema_version": 1, "seed": "x"})


def test_every_scenario_file_is_valid():
    for p in sorted(SCENARIOS.glob("*.json")):
        if p.name == "malformed.json":
            continue
        Scenario.load(str(p))


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "eqhom", "list-checks"], capture_output=True, text=True, check=True)
    assert "reilu" in out.stdout
