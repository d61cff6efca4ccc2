import json
import subprocess
import sys
from pathlib import Path

import pytest

from rainbow_paths.cli import main
from rainbow_paths.graph import complete, cycle, wheel, write_dimacs, write_edge_list

DATA = Path(__file__).resolve().parent.parent / "data"
GRAPHS = DATA / "graphs"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p

    return write


def test_chromatic(capsys):
    code, out, _ = run(capsys, "chromatic", GRAPHS / "cycle5.col", "--circular")
    assert code == 0 and out["chi_c"] == {"n": 5, "d": 2}
    assert len(out["witness"]) == 5
    code, out, _ = run(capsys, "chromatic", GRAPHS / "k4.col")
    assert code == 0 and out["chi"] == 4


def test_chromatic_edge_list_and_format_override(capsys, files):
    p = files("w.txt", write_edge_list(wheel(5)))
    assert run(capsys, "chromatic", p)[1]["chi"] == 4
    q = files("c.txt", write_dimacs(cycle(7)))
    assert run(capsys, "chromatic", q, "--format", "dimacs", "--circular")[1]["chi_c"] == {"n": 7, "d": 3}


@pytest.mark.parametrize("text", ["", "p edge 3 1\ne 1 9\n"])
def test_bad_input_exits_2(capsys, files, text):
    code, out, err = run(capsys, "chromatic", files("bad.col", text))
    assert code == 2 and out is None and err.startswith("error:")


def test_missing_file_exits_2(capsys, tmp_path):
    assert run(capsys, "chromatic", tmp_path / "nope.col")[0] == 2


def test_color_theorem1(capsys):
    code, out, _ = run(capsys, "color", GRAPHS / "cycle5.col", "--theorem", "1")
    assert code == 0 and out["k"] == 3
    assert out["verified"] == {"lies_on": True}
    assert out["witnesses"]["lies_on"] == [True] * 5
    assert sorted(out["coloring"]) == [1, 1, 2, 2, 3]


def test_color_theorem2(capsys):
    code, out, _ = run(capsys, "color", GRAPHS / "cycle7.col", "--theorem", "2")
    assert code == 0 and out["trace"]["bound"] == "3/7"
    code, _, err = run(capsys, "color", GRAPHS / "k4.col", "--theorem", "2")
    assert code == 2 and "chi_c equals chi" in err


def test_color_theorem3(capsys):
    code, out, _ = run(capsys, "color", GRAPHS / "wheel5.col", "--theorem", "3")
    assert code == 0 and out["witnesses"]["begins"] == [True] * 6
    code, out, _ = run(capsys, "color", GRAPHS / "wheel5.col", "--theorem", "3", "--cycle", "0,1,2,5")
    assert code == 0 and out["trace"]["cycle"] == [0, 1, 2, 5]
    code, _, err = run(capsys, "color", GRAPHS / "cycle5.col", "--theorem", "3")
    assert code == 2 and "no cycle" in err
    assert run(capsys, "color", GRAPHS / "wheel5.col", "--theorem", "3", "--cycle", "0,1,x")[0] == 2


def test_color_theorem4(capsys):
    code, out, _ = run(
        capsys, "color", GRAPHS / "cycle5.col", "--theorem", "4", "--orientation", GRAPHS / "cycle5_layered.arcs"
    )
    assert code == 0 and out["witnesses"]["path"] == [4, 0, 1]
    assert out["trace"]["case"] == "layered"
    assert run(capsys, "color", GRAPHS / "cycle5.col", "--theorem", "4")[0] == 2


def test_color_budget_exhaustion_is_not_a_bug(capsys):
    code, _, err = run(capsys, "color", GRAPHS / "grotzsch.col", "--theorem", "1", "--budget-ms", "0")
    assert code == 1 and err.startswith("budget")


def test_verify_modes(capsys, files):
    g = GRAPHS / "cycle5.col"
    assert run(capsys, "verify", g, files("f.txt", "0 1\n1 2\n2 3\n3 1\n4 2\n"))[0] == 0
    alt = files("alt.json", json.dumps({"k": 3, "colors": [1, 2, 1, 2, 3]}))
    code, out, _ = run(capsys, "verify", g, alt, "--mode", "begins")
    assert code == 0 and out["begins"] == [True] * 5
    # path 0-1-2 coloured 1,2,3: the middle vertex begins nothing of order 3
    p3 = files("p3.txt", "0 1\n1 2\n")
    col = files("p3c.txt", "0 1\n1 2\n2 3\n")
    assert run(capsys, "verify", p3, col)[0] == 0
    code, out, _ = run(capsys, "verify", p3, col, "--mode", "begins")
    assert code == 1 and out["begins"] == [True, False, True]


def test_verify_directed(capsys, files):
    g = GRAPHS / "cycle5.col"
    f = files("f.txt", "0 1\n1 2\n2 3\n3 1\n4 2\n")
    o = files("o.arcs", "1 0\n1 2\n3 2\n3 4\n4 0\n")
    code, out, _ = run(capsys, "verify", g, f, "--mode", "directed", "--orientation", o)
    assert code == 1 and out == {"directed": False, "witness": None}
    code, out, _ = run(
        capsys, "verify", g, f, "--mode", "directed", "--orientation", GRAPHS / "cycle5_cyclic.arcs"
    )
    assert code == 0 and len(out["witness"]) == 3


def test_verify_errors(capsys, files):
    g = GRAPHS / "cycle5.col"
    code, _, err = run(capsys, "verify", g, files("short.txt", "0 1\n1 2\n"))
    assert code == 2 and "2 entries" in err
    code, _, err = run(capsys, "verify", g, files("bad.txt", "0 1\n1 1\n2 2\n3 1\n4 2\n"))
    assert code == 2 and "edge 0-1" in err
    code, _, err = run(capsys, "verify", g, files("junk.txt", "0 1\nzz\n"))
    assert code == 2 and "line 2" in err


def test_sweep_default_config(capsys, tmp_path):
    out_path = tmp_path / "rec.jsonl"
    code, out, _ = run(capsys, "sweep", DATA / "configs" / "default.json", "--out", out_path)
    assert code == 0 and out["failures"] == 0
    assert out["c7_exception"]["C7"]["begins_everywhere_colorings"] == 0
    lines = out_path.read_text().splitlines()
    assert len(lines) == out["records"]
    assert all(set(json.loads(x)) == {"graph", "check", "status", "reason", "coloring", "detail"} for x in lines)


def test_sweep_conjecture_summary(capsys, files):
    cfg = files("c.json", json.dumps({"max_vertices": 0, "families": [["cycle", 7], ["cycle", 5]], "checks": ["conjecture"]}))
    code, out, _ = run(capsys, "sweep", cfg)
    assert code == 0 and out["counterexample"] is None
    assert out["known_exceptions"] == [cycle(7).to_dict()]


def test_sweep_zero_budget(capsys, files):
    cfg = files("c.json", json.dumps({"max_vertices": 4, "checks": ["theorem3"]}))
    code, out, _ = run(capsys, "sweep", cfg, "--budget-ms", "0")
    assert code == 0 and out["counters"] == {"theorem3:skipped": 44}


@pytest.mark.parametrize("text", ["{", '{"max_vertices": 5, "checks": ["bogus"]}', '{"colour": 1}'])
def test_sweep_bad_config(capsys, files, text):
    assert run(capsys, "sweep", files("c.json", text))[0] == 2


@pytest.mark.parametrize(
    "name, theorem",
    [("cycle5.col", 1), ("cycle7.col", 1), ("petersen.col", 1), ("cycle7.col", 2), ("wheel5.col", 3), ("k4.col", 3)],
)
def test_colorings_round_trip_through_verify(capsys, tmp_path, name, theorem):
    code, out, _ = run(capsys, "color", GRAPHS / name, "--theorem", theorem)
    assert code == 0
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"k": out["k"], "colors": out["coloring"]}))
    mode = "begins" if theorem == 3 else "lies_on"
    code, report, _ = run(capsys, "verify", GRAPHS / name, f, "--mode", mode)
    assert report == out["witnesses"]
    if theorem == 2:
        # only the strong vertices are promised full paths
        assert all(report["begins"][u] for u in out["trace"]["strong"])
    else:
        assert code == 0


def test_output_is_byte_stable(tmp_path):
    p = tmp_path / "k.col"
    p.write_text(write_dimacs(complete(5)))
    argv = [sys.executable, "-m", "rainbow_paths", "color", str(p), "--theorem", "3"]
    a = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["k"] == 5
