import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from circlekit.cli import RenderOptions, render_scene
from circlekit.cli.main import main
from circlekit.kernel import Circle, Point
from circlekit.scene import SceneDocument


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_centers_sides(capsys):
    code, out, _ = run(capsys, "centers", "--sides", "5,4,3")
    assert code == 0
    doc = json.loads(out)
    # canonical placement: B at the origin, C = (a, 0)
    assert doc["points"]["B"] == [0.0, 0.0] and doc["points"]["C"] == [5.0, 0.0]
    cx, cy = doc["points"]["circumcenter"]
    assert abs(cx - 2.5) < 1e-12 and abs(cy) < 1e-12


def test_centers_collinear(capsys):
    code, _, err = run(capsys, "centers", "--points", "0,0", "1,0", "2,0")
    assert code == 2
    assert "degenerate triangle" in err


def test_centers_equilateral(capsys):
    code, out, _ = run(capsys, "centers", "--sides", "1,1,1")
    pts = json.loads(out)["points"]
    G = pts["centroid"]
    for k in ("circumcenter", "incenter", "orthocenter", "nine_point", "symmedian_point"):
        assert abs(pts[k][0] - G[0]) < 1e-12 and abs(pts[k][1] - G[1]) < 1e-12


def test_circle_lemoine2(capsys):
    code, out, _ = run(capsys, "circle", "--points", "0,3", "0,0", "4,0", "lemoine2")
    c = json.loads(out)["circles"]["lemoine2"]
    assert code == 0
    assert abs(c["center"][0] - 0.72) < 1e-12 and abs(c["center"][1] - 0.96) < 1e-12
    assert abs(c["r2"] - 1.44) < 1e-12


def test_circle_excircle_radical(capsys):
    code, out, _ = run(capsys, "circle", "--points", "0,3", "0,0", "4,0", "excircle-radical")
    c = json.loads(out)["circles"]["excircle-radical"]
    assert c["center"] == [1.5, 1.0] and abs(c["r2"] - 9.25) < 1e-12


def test_circle_rational_backend(capsys):
    code, out, _ = run(capsys, "circle", "--backend", "rational", "--points", "0,3", "0,0", "4,0", "lemoine2")
    assert code == 0
    assert json.loads(out)["exact"]["circles"]["lemoine2"]["r2"] == "36/25"


def test_circle_isosceles(capsys):
    code, _, err = run(capsys, "circle", "--sides", "1,1,1", "apollonius", "--vertex", "A", "--k", "1")
    assert code == 2 and "IsoscelesUndefined" in err


def test_check_json_lines(capsys):
    code, out, _ = run(capsys, "check", "DF2.T1", "L3.P1", "--json", "--trials", "20")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2
    assert [json.loads(l)["id"] for l in lines] == ["DF2.T1", "L3.P1"]


def test_check_unknown(capsys):
    code, _, _ = run(capsys, "check", "BOGUS")
    assert code == 3


def test_check_failure_exit(capsys):
    code, _, _ = run(capsys, "check", "L1.T1", "--trials", "3", "--threshold", "-1")
    assert code == 1


def test_ruler_verify(capsys):
    code, out, _ = run(capsys, "ruler", "verify", "--builtin", "parallel_to_diameter", "--trials", "50")
    assert code == 0


def test_ruler_run_deterministic(capsys):
    a = run(capsys, "ruler", "run", "--builtin", "problem3", "--seed", "5")
    b = run(capsys, "ruler", "run", "--builtin", "problem3", "--seed", "5")
    assert a[0] == 0 and a[1] == b[1]


def test_ruler_bad_program(capsys, tmp_path):
    bad = tmp_path / "bad.ruler"
    bad.write_text("given A : point\nC2 = circle(A, 3)\n")
    code, _, err = run(capsys, "ruler", "run", str(bad))
    assert code == 2
    assert "line 2" in err


def test_render_unit_circle(capsys, tmp_path):
    src = tmp_path / "u.json"
    src.write_text(SceneDocument(circles={"u": Circle(Point(0, 0), 1)}).to_json())
    out = tmp_path / "u.svg"
    code, _, _ = run(capsys, "render", str(src), "-o", str(out))
    root = ET.fromstring(out.read_text())
    circles = root.findall("{http://www.w3.org/2000/svg}circle")
    assert code == 0 and len(circles) == 1
    assert float(circles[0].get("r")) == pytest.approx(512 * (1 - 2 * 0.08) / 2)


def test_render_empty():
    svg = render_scene(SceneDocument(), RenderOptions())
    root = ET.fromstring(svg)
    assert root.get("viewBox") == "0 0 1 1"
    assert len(list(root)) == 0


def test_render_deterministic(capsys):
    _, out, _ = run(capsys, "circle", "--points", "0,3", "0,0", "4,0", "lemoine1")
    doc = SceneDocument.from_json(out)
    assert render_scene(doc, RenderOptions()) == render_scene(SceneDocument.from_json(out), RenderOptions())


def test_scene_roundtrip(capsys):
    _, out, _ = run(capsys, "circle", "--backend", "rational", "--points", "0,3", "0,0", "4,0", "neuberg")
    doc = SceneDocument.from_json(out)
    assert doc.to_json() == out.rstrip("\n")


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "circlekit.cli.main", "check", "N.P1", "--trials", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
