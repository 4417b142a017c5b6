import csv
import io
import json
import subprocess
import sys

from contentseries.cli import main, run
from contentseries.series import GradedSeries, build_phi, exp_series


def test_closedform_hurwitz():
    code, out = run(["closedform", "--kind", "hurwitz", "--partition", "2,1"])
    assert code == 0
    (row,) = json.loads(out)["rows"]
    assert row["raw_count"] == "24"


def test_closedform_csv():
    code, out = run(["closedform", "--kind", "hypermap", "--m", "2", "--partition", "3", "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows[0]["raw_count"] == "10" and rows[0]["kind"] == "hypermap(2)"


def test_oracle_monotone():
    code, out = run(["oracle", "--kind", "monotone", "--partition", "3", "--m", "2", "--transitive"])
    assert code == 0
    assert json.loads(out)["rows"][0]["count"] == 4


def test_oracle_tuples_and_jm():
    code, out = run(["oracle", "--kind", "tuples", "--partition", "3", "--m", "2", "--genus", "0", "--threads", "2"])
    assert code == 0 and json.loads(out)["rows"][0]["count"] == 10
    code, out = run(["oracle", "--kind", "jm", "--partition", "2", "--f", "1,1,1,1", "-M", "3"])
    rows = json.loads(out)["rows"]
    assert code == 0 and [(r["ydeg"], r["num"]) for r in rows] == [(1, "1"), (3, "1")]


def test_series_json_round_trip():
    code, out = run(["series", "--what", "phi", "--f", "exp", "-N", "3", "-M", "3"])
    payload = json.loads(out)
    assert code == 0
    parsed = GradedSeries.from_json(payload["rows"], payload["N"], payload["M"])
    assert parsed == build_phi(exp_series(3), 3, 3)


def test_series_slice_csv():
    code, out = run(["series", "--what", "slice", "--genus", "0", "--f", "geom", "-N", "3", "-M", "4", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["partition", "ydeg", "num", "den"]
    assert ["3", "2", "2", "3"] in rows


def test_verify_pde_exit_zero():
    code, out = run(["verify", "--suite", "pde", "--f", "exp", "-N", "4", "-M", "4"])
    assert code == 0 and out.startswith("PASS pde")


def test_verify_quotient_pde():
    code, out = run(["verify", "--suite", "pde", "--f", "one", "--g", "1,-1", "-N", "3", "-M", "3"])
    assert code == 0 and "2 checks" in out


def test_verify_is_deterministic():
    first = run(["verify", "--suite", "genus0pde", "-N", "4"])
    assert first == run(["verify", "--suite", "genus0pde", "-N", "4"])
    assert first[0] == 0


def test_usage_errors():
    assert main(["bogus"]) == 2
    assert main(["closedform", "--kind", "hurwitz", "--partition", "2,x"]) == 2
    assert main(["closedform", "--kind", "hurwitz", "--partition", "-"]) == 2
    assert main(["oracle", "--kind", "transpositions", "--partition", "2"]) == 2
    assert main(["series", "--f", "sin"]) == 2
    assert main(["verify", "--suite", "pde", "--g", "0,1"]) == 2


def test_guard_exit_code(capsys):
    assert main(["oracle", "--kind", "tuples", "--partition", "4,4", "--m", "4"]) == 3
    assert "65548320768000" in capsys.readouterr().err
    assert main(["oracle", "--kind", "tuples", "--partition", "2", "--m", "2", "--max-states", "1"]) == 3


def test_help_documents_csv_columns():
    proc = subprocess.run(
        [sys.executable, "-m", "contentseries", "closedform", "--help"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "partition,genus,kind,num,den,raw_count" in proc.stdout
