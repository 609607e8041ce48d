import csv
import json
import math
import os
from pathlib import Path

import jsonschema
import pytest

from gausscf.cli import main, parse_theta

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


def test_parse_theta_grammar():
    assert parse_theta("0.7+0.3i") == 0.7 + 0.3j
    assert parse_theta("-1.25") == -1.25
    assert parse_theta("0.5-0.1i") == 0.5 - 0.1j
    assert parse_theta("1e-3+2.5e-1i") == 0.001 + 0.25j
    for bad in ("abc", "1+i2", "0.5i", "1 + 2i", ""):
        with pytest.raises(ValueError):
            parse_theta(bad)


def test_malformed_theta_is_usage_error(tmp_path, capsys):
    code = main(["best-approx", "--theta", "nonsense", "--qmax", "10"])
    assert code == 2


def test_best_approx_json(tmp_path):
    out = tmp_path / "seq.json"
    code = main(["best-approx", "--theta", "0.7+0.3i", "--qmax", "100", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, load_schema("best_approx.schema.json"))
    assert doc["terminated"] is True  # 0.7+0.3i is Gaussian rational
    qmods = [t["qmod"] for t in doc["terms"]]
    errs = [t["err"] for t in doc["terms"]]
    assert qmods == sorted(qmods)
    assert errs == sorted(errs, reverse=True)
    assert len(doc["terms"]) >= 1


def test_best_approx_csv(tmp_path):
    out = tmp_path / "seq.csv"
    assert main(["best-approx", "--theta", "0.41421356+0.7320508i", "--qmax", "50",
                 "--format", "csv", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.read_text().splitlines()))
    assert rows and set(rows[0]) == {"p_re", "p_im", "q_re", "q_im", "qmod", "err"}
    # 17-significant-digit floats round-trip
    assert float(rows[0]["qmod"]) == 1.0


def test_orbit_jsonl(tmp_path):
    out = tmp_path / "orbit.jsonl"
    theta = "0.41421356237+0.23205080757i"
    assert main(["orbit", "--theta", theta, "--steps", "100", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 100
    schema = load_schema("orbit.schema.json")
    for line in lines:
        jsonschema.validate(json.loads(line), schema)


def test_orbit_zero_steps(tmp_path):
    out = tmp_path / "empty.jsonl"
    assert main(
        ["orbit", "--theta", "0.31830988618+0.91893853321i", "--steps", "0", "--out", str(out)]
    ) == 0
    assert out.read_text() == ""


def test_orbit_rational_seed_partial(tmp_path, capsys):
    out = tmp_path / "orbit.jsonl"
    assert main(["orbit", "--theta", "0.5", "--steps", "50", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) < 50
    assert "terminated" in capsys.readouterr().err


def test_critical_zi(tmp_path):
    out = tmp_path / "g1.json"
    assert main(["critical", "--ring", "zi", "--epsilon", "0.001", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, load_schema("critical.schema.json"))
    assert len(doc["pairs"]) == 18


def test_critical_j(tmp_path):
    out = tmp_path / "g2.json"
    assert main(["critical", "--ring", "j", "--epsilon", "0.001", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, load_schema("critical.schema.json"))
    assert len(doc["pairs"]) == 16
    assert all(row[4] == "j" for row in doc["pairs"])


def test_dirichlet_csv_and_determinism(tmp_path):
    out1 = tmp_path / "d1.csv"
    out2 = tmp_path / "d2.csv"
    args = ["--seed", "7", "dirichlet", "--samples", "5", "--qmax", "200"]
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    rows = list(csv.DictReader(out1.read_text().splitlines()))
    assert len(rows) == 5
    bound = math.sqrt(2) / (3 - math.sqrt(3)) + 1e-9
    assert all(float(r["c_theta"]) <= bound for r in rows)


def test_seed_env_override(tmp_path, monkeypatch):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    main(["--seed", "7", "dirichlet", "--samples", "3", "--qmax", "100", "--out", str(out1)])
    monkeypatch.setenv("GAUSSCF_SEED", "7")
    main(["--seed", "99", "dirichlet", "--samples", "3", "--qmax", "100", "--out", str(out2)])
    assert out1.read_bytes() == out2.read_bytes()


def test_regions_export(tmp_path):
    out = tmp_path / "regions.json"
    assert main(["regions-export", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, load_schema("regions_export.schema.json"))
    assert set(doc["disks"]) == {"red1", "red2", "blue1", "blue2", "green1", "green2"}


def test_density_check_small(tmp_path):
    out = tmp_path / "density.json"
    code = main([
        "density-check", "--theta", "0.41421356237+0.23205080757i",
        "--steps", "20000", "--mc-samples", "1000000", "--out", str(out),
    ])
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, load_schema("density_check.schema.json"))
    assert code == 0
    assert doc["reject_at_1e-3"] is False
