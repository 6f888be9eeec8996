import csv
import io
import json
import math
import subprocess
import sys

import pytest

from radixhull.cli import main, parse_p
from radixhull.svg import fmt


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_p():
    assert parse_p("2^(1/n)", 3) == math.exp(math.log(2) / 3)
    assert parse_p("2^(1/3)+0.3", 5) == pytest.approx(2 ** (1 / 3) + 0.3)
    assert parse_p("2^(1/2)", 8) == pytest.approx(math.sqrt(2))
    assert parse_p("1.25", 2) == 1.25


def test_fmt():
    assert fmt(-0.0) == "0"
    assert fmt(1 / 3) == "0.333333333333"
    assert fmt(-1e-20) == "-1e-20"


def test_extremals_n3(capsys):
    code, out, _ = run(capsys, "extremals", "--n", "3", "--p", "2^(1/n)")
    doc = json.loads(out)
    assert code == 0
    assert doc["extremal_count"] == 6
    assert {v["orbit"] for v in doc["vertices"]} == {"Orb(100)", "Orb(110)"}
    assert doc["scale"] == pytest.approx(1.0)  # p^3 - 1 = 1
    assert all(v["provenance"] == "closed_form" for v in doc["vertices"])
    v2 = doc["vertices"][1]
    assert (v2["re"], v2["im"]) == pytest.approx((0.37003, 1.09112), abs=1e-5)


def test_extremals_n4_csv(capsys):
    code, out, _ = run(capsys, "extremals", "--n", "4", "--p", "1.5", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 4
    assert {r["word"] for r in rows} == {"1100", "0110", "0011", "1001"}
    assert all(r["kind"] == "vertex" for r in rows)


def test_extremals_n1(capsys):
    code, out, _ = run(capsys, "extremals", "--n", "1", "--p", "2")
    pts = [(v["re"], v["im"]) for v in json.loads(out)["vertices"]]
    assert sorted(pts) == [(0, 0), (1, 0)]


@pytest.mark.parametrize(
    "args, code",
    [
        (["--n", "3", "--p", "2^(1/3)"], 0),
        (["--n", "4", "--p", "2", "--alphabet", "0,1,2,3"], 3),
        (["--n", "2", "--p", "1.2"], 0),
    ],
)
def test_check_convex(capsys, args, code):
    got, out, _ = run(capsys, "check-convex", *args)
    assert got == code
    doc = json.loads(out)
    assert set(doc) >= {"is_convex", "max_gap", "threshold"}
    assert doc["is_convex"] == (code == 0)


def test_check_convex_slice_rule(capsys):
    code, out, _ = run(capsys, "check-convex", "--n", "4", "--p", "2", "--alphabet", "0,1,2,3", "--rule", "slice")
    assert code == 0 and json.loads(out)["threshold"] == pytest.approx(1.0)


@pytest.mark.parametrize(
    "args",
    [
        ["check-convex", "--n", "0"],
        ["check-convex", "--n", "3", "--p", "0.5"],
        ["check-convex", "--n", "3", "--p", "abc"],
        ["check-convex", "--n", "3", "--alphabet", "0,1,1"],
        ["check-convex", "--n", "3", "--alphabet", "1"],
        ["check-convex", "--n", "3", "--tol", "0.5"],
        ["check-convex"],
        ["render", "--n", "3", "--depth", "-1"],
        ["render", "--n", "3", "--depth", "30"],
        ["bogus"],
    ],
)
def test_invalid_input_exit_2(capsys, args):
    code, _, err = run(capsys, *args)
    assert code == 2
    assert err


def test_unwritable_path(capsys, tmp_path):
    code, _, err = run(capsys, "render", "--n", "3", "--depth", "2", "--out", str(tmp_path / "missing" / "x.svg"))
    assert code == 2 and "cannot write" in err


def test_render_deterministic(tmp_path):
    paths = [tmp_path / f"{i}.svg" for i in range(2)]
    for p in paths:
        assert main(["render", "--n", "5", "--p", "1.3", "--alphabet", "0,1,3", "--depth", "6", "--out", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    text = paths[0].read_text()
    assert text.startswith('<?xml version="1.0"')
    assert text.count("<circle") == 3**6
    assert 'version="1.1"' in text


def test_render_depth0(capsys):
    code, out, _ = run(capsys, "render", "--n", "3", "--p", "1.2", "--depth", "0")
    assert code == 0
    assert out.count("<circle") == 1
    assert '<circle cx="0" cy="0"' in out
    assert '<polyline id="hull"' in out


def test_render_csv_and_figure(capsys, tmp_path):
    fig = tmp_path / "fig.png"
    code, out, _ = run(capsys, "render", "--n", "4", "--p", "2^(1/n)", "--depth", "3", "--format", "csv", "--figure", str(fig))
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [r["kind"] for r in rows].count("cloud") == 8
    assert [r["kind"] for r in rows].count("vertex") == 4
    assert rows[1]["word"] == "001"
    assert fig.stat().st_size > 1000


def test_render_nonconvex_class(capsys):
    _, out, _ = run(capsys, "render", "--n", "3", "--p", "2^(1/3)+0.3", "--depth", "4")
    assert 'class="hull nonconvex"' in out
    hull = out.split('points="')[1].split('"')[0].split()
    assert len(hull) == 7 and hull[0] == hull[-1]


def test_verify_odd_parity(capsys):
    code, out, _ = run(capsys, "verify", "--parity", "odd")
    assert code == 0, out
    assert "counts 2n" in out


def test_verify_even_counts(capsys):
    code, out, _ = run(capsys, "verify", "--parity", "even", "--suite", "counts")
    assert code == 0 and "counts n" in out


def test_verify_default_seed(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0, out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_console_script_entry():
    r = subprocess.run([sys.executable, "-m", "radixhull.cli", "check-convex", "--n", "3", "--p", "2"], capture_output=True)
    assert r.returncode == 3
