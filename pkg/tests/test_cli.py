import json
import subprocess
import sys

import pytest

from cyclicweights.cli import main
from cyclicweights.code import parse_enumerator

SMALL = ["--p", "5", "--s", "1", "--m", "2", "--h", "4", "--e", "4"]
SMALL_ENUM = "1+48x^14+96x^16+96x^18+240x^20+96x^22+48x^24"


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_closed_text(capsys):
    code, out, _ = run(capsys, SMALL + ["closed"])
    assert code == 0
    assert out.strip() == SMALL_ENUM


def test_brute_text(capsys):
    code, out, _ = run(capsys, SMALL + ["brute"])
    assert code == 0
    assert out.strip() == SMALL_ENUM


def test_verify_text(capsys):
    code, out, _ = run(capsys, SMALL + ["verify"])
    assert code == 0
    assert "agreement: true" in out


def test_closed_json(capsys):
    code, out, _ = run(capsys, ["--p", "17", "--s", "1", "--m", "2", "--h", "4", "--e", "4", "closed", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["case"] == "square"
    assert data["eta"] == [-9, 8]
    assert data["pi_trace"] == -30
    assert data["pi"][0] == 1 and abs(data["pi"][1]) == 4
    assert data["params"]["n"] == 72 and data["params"]["N"] == 2
    assert sum(row["count"] for row in data["distribution"]) == 289**2
    # the enumerator string round-trips
    dist = parse_enumerator(data["enumerator"], 72)
    assert dict(dist.items()) == {row["weight"]: row["count"] for row in data["distribution"]}


def test_verify_json_supersingular(capsys):
    code, out, _ = run(capsys, ["--p", "3", "--s", "2", "--m", "2", "--h", "8", "--e", "4", "verify", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["agreement"] is True
    assert data["pi"] == "i*sqrt(p)"
    assert data["case"] == "nonsquare"


def test_closed_rejects_other_e(capsys):
    code, _, err = run(capsys, ["--p", "17", "--s", "1", "--m", "2", "--h", "3", "--e", "3", "closed"])
    assert code == 2
    assert "e=4, N=2" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["--p", "5", "--s", "1", "--m", "2", "--h", "3", "--e", "4", "brute"],
        ["--p", "6", "--s", "1", "--m", "2", "--h", "1", "--e", "1", "brute"],
        ["--p", "5", "--s", "1", "--m", "2", "--h", "4", "brute"],
        SMALL + ["--modulus", "1,0,1", "brute"],
    ],
)
def test_invalid_parameters(capsys, argv):
    code, _, err = run(capsys, argv)
    assert code == 2
    assert err.startswith("error:")


def test_budget_exceeded(capsys):
    # r = 3^12: r^2 pairs is far beyond the default budget
    code, _, err = run(capsys, ["--p", "3", "--s", "2", "--m", "6", "--h", "4", "--e", "4", "brute"])
    assert code == 3
    assert "error" in err


def test_oracles_single_suite(capsys):
    code, out, _ = run(capsys, ["oracles", "--suite", "lemma31", "--max-r", "25"])
    assert code == 0
    assert out.startswith("PASS lemma31")


def test_oracles_json(capsys):
    code, out, _ = run(capsys, ["oracles", "--suite", "lemma32", "--max-card", "200", "--format", "json"])
    assert code == 0
    (entry,) = json.loads(out)
    assert entry["suite"] == "lemma32" and entry["failed"] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cyclicweights", *SMALL, "closed"], capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == SMALL_ENUM
